#include "peanocube/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace peanocube {

Graph::Graph(int n, std::vector<Edge> edges, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 0) fail("OutOfRange", "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) fail("OutOfRange", "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("OutOfRange", "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail("OutOfRange", "parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    return components(*this).size() == 1;
}

bool Graph::is_regular() const {
    if (n_ == 0) return false;
    for (int v = 1; v < n_; ++v) {
        if (degree(v) != degree(0)) return false;
    }
    return true;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.n()) {
    d_.assign(static_cast<size_t>(n_) * n_, kUnreachable);
    std::vector<int> queue;
    queue.reserve(n_);
    for (int s = 0; s < n_; ++s) {
        int* row = d_.data() + static_cast<size_t>(s) * n_;
        queue.clear();
        queue.push_back(s);
        row[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

Metric::Metric(const Graph& g) : g_(&g), dist_(g) {
    int n = g.n();
    between_.assign(static_cast<size_t>(n) * n, Bitset(n));
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            int duv = dist_.at(u, v);
            if (duv == kUnreachable) continue;
            Bitset& b = between_[static_cast<size_t>(u) * n + v];
            for (int z = 0; z < n; ++z) {
                int a = dist_.at(u, z), c = dist_.at(z, v);
                if (a != kUnreachable && c != kUnreachable && a + c == duv) b.set(z);
            }
            between_[static_cast<size_t>(v) * n + u] = b;
        }
    }
}

DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

VertexSet interval(const Metric& m, int x, int y) {
    if (m.d(x, y) == kUnreachable)
        fail("DisconnectedPair", "no path between " + std::to_string(x) + " and " + std::to_string(y));
    return m.between(x, y).to_vector();
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult res;
    res.bipartite = true;
    res.color.assign(g.n(), -1);
    std::vector<int> parent(g.n(), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (res.color[s] != -1) continue;
        res.color[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (res.color[w] == -1) {
                    res.color[w] = res.color[u] ^ 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (res.color[w] == res.color[u]) {
                    // Odd closed walk: u up to the meeting ancestor, back
                    // down to w, closed by the edge wu.
                    std::vector<int> pu{u}, pw{w};
                    while (parent[pu.back()] != -1) pu.push_back(parent[pu.back()]);
                    while (parent[pw.back()] != -1) pw.push_back(parent[pw.back()]);
                    while (pu.size() > 1 && pw.size() > 1 &&
                           pu[pu.size() - 1] == pw[pw.size() - 1] &&
                           pu[pu.size() - 2] == pw[pw.size() - 2]) {
                        pu.pop_back();
                        pw.pop_back();
                    }
                    res.odd_cycle = pu;  // u ... lca
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        res.odd_cycle.push_back(*it);  // ... w (lca skipped)
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    return res;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_sub.assign(g.n(), -1);
    out.to_host = s;
    std::sort(out.to_host.begin(), out.to_host.end());
    for (size_t i = 0; i < out.to_host.size(); ++i) {
        int v = out.to_host[i];
        if (v < 0 || v >= g.n()) fail("OutOfRange", "subgraph vertex out of range");
        if (out.to_sub[v] != -1) fail("OutOfRange", "duplicate subgraph vertex");
        out.to_sub[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (out.to_sub[u] != -1 && out.to_sub[v] != -1)
            edges.emplace_back(out.to_sub[u], out.to_sub[v]);
    }
    out.graph = Graph(static_cast<int>(out.to_host.size()), std::move(edges));
    return out;
}

namespace {

// Per-vertex invariant used to prune the isomorphism search: degree plus the
// sorted multiset of BFS distances to all other vertices.
std::vector<std::vector<int>> distance_profiles(const Graph& g) {
    DistanceMatrix d(g);
    std::vector<std::vector<int>> prof(g.n());
    for (int v = 0; v < g.n(); ++v) {
        prof[v].push_back(g.degree(v));
        std::vector<int> row(g.n());
        for (int u = 0; u < g.n(); ++u) row[u] = d.at(v, u);
        std::sort(row.begin(), row.end());
        prof[v].insert(prof[v].end(), row.begin(), row.end());
    }
    return prof;
}

bool extend_isomorphism(const Graph& g, const Graph& h,
                        const std::vector<int>& order, size_t pos,
                        const std::vector<std::vector<int>>& pg,
                        const std::vector<std::vector<int>>& ph,
                        std::vector<int>& map, std::vector<char>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < h.n(); ++w) {
        if (used[w] || pg[v] != ph[w]) continue;
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (map[u] != -1 && !h.has_edge(map[u], w)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // non-adjacency must be preserved too
            for (size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                if (!g.has_edge(u, v) && h.has_edge(map[u], w)) ok = false;
            }
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_isomorphism(g, h, order, pos + 1, pg, ph, map, used)) return true;
        map[v] = -1;
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h, int max_n) {
    if (g.n() > max_n || h.n() > max_n)
        fail("TooLarge", "isomorphism capped at " + std::to_string(max_n) + " vertices");
    if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
    if (g.n() == 0) return std::vector<int>{};
    auto pg = distance_profiles(g), ph = distance_profiles(h);
    {
        auto a = pg, b = ph;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    // Map high-degree vertices first; keeps the search shallow on the
    // near-regular graphs this library deals in.
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    // BFS-connected ordering: mapped vertices should form a connected prefix
    // when possible so adjacency constraints bind early.
    std::vector<int> bfs_order;
    std::vector<char> seen(g.n(), 0);
    for (int root : order) {
        if (seen[root]) continue;
        std::vector<int> queue{root};
        seen[root] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bfs_order.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<int> map(g.n(), -1);
    std::vector<char> used(h.n(), 0);
    if (extend_isomorphism(g, h, bfs_order, 0, pg, ph, map, used)) return map;
    return std::nullopt;
}

bool are_isomorphic(const Graph& g, const Graph& h, int max_n) {
    return isomorphism(g, h, max_n).has_value();
}

ProductResult cartesian_product(const std::vector<Graph>& factors) {
    if (factors.empty()) fail("EmptyFactor", "no factors");
    long long total = 1;
    for (const auto& f : factors) {
        if (f.n() == 0) fail("EmptyFactor", "empty factor");
        if (!f.is_connected()) fail("EmptyFactor", "disconnected factor");
        total *= f.n();
        if (total > 1'000'000) fail("TooLarge", "product too large");
    }
    int n = static_cast<int>(total);
    int k = static_cast<int>(factors.size());
    ProductResult out;
    out.projections.assign(k, std::vector<int>(n));
    for (int v = 0; v < n; ++v) {
        int rem = v;
        for (int i = k - 1; i >= 0; --i) {
            out.projections[i][v] = rem % factors[i].n();
            rem /= factors[i].n();
        }
    }
    std::vector<Edge> edges;
    std::vector<long long> stride(k, 1);
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].n();
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            int ci = out.projections[i][v];
            for (int w : factors[i].neighbors(ci)) {
                if (w > ci) {
                    int u = v + static_cast<int>((w - ci) * stride[i]);
                    edges.emplace_back(v, u);
                }
            }
        }
    }
    out.graph = Graph(n, std::move(edges));
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Bitset component_of(const Graph& g, int v, const Bitset& allowed) {
    Bitset comp(g.n());
    if (!allowed.test(v)) return comp;
    std::vector<int> queue{v};
    comp.set(v);
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.neighbors(queue[head])) {
            if (allowed.test(w) && !comp.test(w)) {
                comp.set(w);
                queue.push_back(w);
            }
        }
    }
    return comp;
}

}  // namespace peanocube
