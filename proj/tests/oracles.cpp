#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "peanocube/analysis.hpp"
#include "peanocube/convexity.hpp"
#include "peanocube/retracts.hpp"
#include "peanocube/transform.hpp"

namespace oracles {

using namespace peanocube;

uint64_t rng_next(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(g.n(), std::vector<int>(g.n(), inf));
    for (int v = 0; v < g.n(); ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < g.n(); ++k) {
        for (int i = 0; i < g.n(); ++i) {
            for (int j = 0; j < g.n(); ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= inf) x = peanocube::kUnreachable;
        }
    }
    return d;
}

namespace {

std::vector<int> interval_naive(const std::vector<std::vector<int>>& d, int x, int y, int n) {
    std::vector<int> out;
    if (d[x][y] == peanocube::kUnreachable) return out;
    for (int z = 0; z < n; ++z) {
        if (d[x][z] != peanocube::kUnreachable && d[z][y] != peanocube::kUnreachable &&
            d[x][z] + d[z][y] == d[x][y])
            out.push_back(z);
    }
    return out;
}

}  // namespace

VertexSet hull_by_iteration(const Graph& g, const VertexSet& seed) {
    auto d = floyd_warshall(g);
    std::vector<char> in(g.n(), 0);
    for (int v : seed) in[v] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < g.n(); ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < g.n(); ++y) {
                if (!in[y] || d[x][y] == peanocube::kUnreachable) continue;
                for (int z : interval_naive(d, x, y, g.n())) {
                    if (!in[z]) {
                        in[z] = 1;
                        grew = true;
                    }
                }
            }
        }
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        if (in[v]) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> theta_classes_pairwise(const Graph& g) {
    auto d = floyd_warshall(g);
    int m = g.m();
    std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            auto [x, y] = g.edges()[i];
            auto [u, v] = g.edges()[j];
            rel[i][j] = d[x][u] + d[y][v] != d[x][v] + d[y][u];
        }
        rel[i][i] = 1;
    }
    // explicit transitive closure
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (!rel[i][j]) continue;
                for (int k = 0; k < m; ++k) {
                    if (rel[j][k] && !rel[i][k]) {
                        rel[i][k] = 1;
                        grew = true;
                    }
                }
            }
        }
    }
    std::vector<int> cls(m, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < m; ++i) {
        if (cls[i] != -1) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        for (int j = i; j < m; ++j) {
            if (rel[i][j]) {
                cls[j] = id;
                classes[id].push_back(j);
            }
        }
    }
    return classes;
}

bool convex_by_definition(const Graph& g, const VertexSet& s) {
    auto d = floyd_warshall(g);
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    for (int x : s) {
        for (int y : s) {
            if (d[x][y] == peanocube::kUnreachable) continue;
            for (int z : interval_naive(d, x, y, g.n())) {
                if (!in[z]) return false;
            }
        }
    }
    return true;
}

std::vector<VertexSet> tori_by_subsets(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() > 20) return out;
    for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        VertexSet verts;
        for (int v = 0; v < g.n(); ++v) {
            if (mask & (1u << v)) verts.push_back(v);
        }
        if (!convex_by_definition(g, verts)) continue;
        auto sub = induced_subgraph(g, verts);
        if (!sub.graph.is_connected()) continue;
        if (!is_quasi_hypertorus(sub.graph)) continue;
        out.push_back(verts);
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

VertexSet medians_of(const Graph& g, int u, int v, int w) {
    auto d = floyd_warshall(g);
    VertexSet out;
    for (int z = 0; z < g.n(); ++z) {
        bool ok = d[u][z] + d[z][v] == d[u][v] && d[v][z] + d[z][w] == d[v][w] &&
                  d[u][z] + d[z][w] == d[u][w];
        if (ok) out.push_back(z);
    }
    return out;
}

namespace {

Graph leaf_by_index(int idx) {
    switch (idx % 6) {
        case 0: return make_hypercube(1);
        case 1: return make_hypercube(2);
        case 2: return make_hypercube(3);
        case 3: return make_even_cycle(6);
        case 4: return make_even_cycle(8);
        default: return make_prism(make_even_cycle(6));
    }
}

std::string leaf_label(int idx) {
    switch (idx % 6) {
        case 0: return "Q1";
        case 1: return "Q2";
        case 2: return "Q3";
        case 3: return "C6";
        case 4: return "C8";
        default: return "C6xK2";
    }
}

// candidate shared pieces of a graph: single vertices and edges
std::vector<VertexSet> shared_candidates(const Graph& g, uint64_t& state, int want) {
    std::vector<VertexSet> out;
    for (int i = 0; i < want; ++i) {
        if (rng_next(state) % 2 == 0 || g.m() == 0) {
            out.push_back({static_cast<int>(rng_next(state) % g.n())});
        } else {
            auto [u, v] = g.edges()[rng_next(state) % g.m()];
            out.push_back({u, v});
        }
    }
    return out;
}

}  // namespace

RandomAmalgam random_hyper_median_amalgam(uint64_t seed, int target_vertices,
                                          bool allow_products) {
    uint64_t state = seed;
    RandomAmalgam out;
    int first = static_cast<int>(rng_next(state) % 6);
    out.graph = leaf_by_index(first);
    out.leaf_labels.push_back(leaf_label(first));
    // edges that are themselves K2 leaves; gluing along one would absorb it
    std::vector<Edge> k2_leaves;
    if (first == 0) k2_leaves.push_back({0, 1});

    while (out.graph.n() < target_vertices) {
        if (allow_products && rng_next(state) % 8 == 0 && out.graph.n() <= target_vertices / 2) {
            // occasional Cartesian product with a small hyper-median factor
            int idx = static_cast<int>(rng_next(state) % 2);  // K2 or C6
            Graph factor = idx == 0 ? make_hypercube(1) : make_even_cycle(6);
            auto prod = cartesian_product({out.graph, factor});
            out.graph = prod.graph;
            out.leaf_labels.clear();
            out.leaf_labels.push_back("product");  // labels no longer tracked
            k2_leaves.clear();
            continue;
        }
        int idx = static_cast<int>(rng_next(state) % 6);
        Graph leaf = leaf_by_index(idx);
        Metric mg(out.graph), ml(leaf);
        bool glued = false;
        for (const auto& host_piece : shared_candidates(out.graph, state, 6)) {
            if (glued) break;
            if (host_piece.size() == 2) {
                Edge e{std::min(host_piece[0], host_piece[1]),
                       std::max(host_piece[0], host_piece[1])};
                if (std::find(k2_leaves.begin(), k2_leaves.end(), e) != k2_leaves.end())
                    continue;
            }
            if (!is_gated(mg, Bitset::of(out.graph.n(), host_piece))) continue;
            for (const auto& leaf_piece : shared_candidates(leaf, state, 6)) {
                if (leaf_piece.size() != host_piece.size()) continue;
                if (static_cast<int>(leaf_piece.size()) >= leaf.n()) continue;
                if (host_piece.size() == 2 && !leaf.has_edge(leaf_piece[0], leaf_piece[1]))
                    continue;
                if (!is_gated(ml, Bitset::of(leaf.n(), leaf_piece))) continue;
                auto res = gated_amalgam(out.graph, leaf, host_piece, leaf_piece);
                if (idx == 0) {
                    // the glued K2's host image: shared vertex plus the fresh one
                    k2_leaves.push_back({std::min(res.map1[0], res.map1[1]),
                                         std::max(res.map1[0], res.map1[1])});
                }
                out.graph = res.graph;
                out.leaf_labels.push_back(leaf_label(idx));
                glued = true;
                break;
            }
        }
        if (!glued) break;  // give up gracefully; caller checks the size
    }
    std::sort(out.leaf_labels.begin(), out.leaf_labels.end());
    return out;
}

SelfMap random_self_contraction(const Graph& g, uint64_t seed) {
    uint64_t state = seed;
    int choice = static_cast<int>(rng_next(state) % 4);
    if (choice == 0) {
        // constant map
        SelfMap f;
        f.image.assign(g.n(), static_cast<int>(rng_next(state) % g.n()));
        return f;
    }
    if (choice == 1 && g.n() <= 40) {
        auto auts = automorphisms(g);
        return auts[rng_next(state) % auts.size()];
    }
    if (choice == 2 && g.m() > 0) {
        // fold retraction onto the hull of a random edge
        auto [u, v] = g.edges()[rng_next(state) % g.m()];
        auto hull = convex_hull(g, VertexSet{u, v});
        auto r = retraction_onto_convex(g, hull.members.to_vector());
        if (g.n() <= 40) {
            auto auts = automorphisms(g);
            const auto& sigma = auts[rng_next(state) % auts.size()];
            SelfMap combo;
            combo.image.resize(g.n());
            for (int x = 0; x < g.n(); ++x) combo.image[x] = sigma.image[r.image[x]];
            return combo;
        }
        return r;
    }
    SelfMap id;
    id.image.resize(g.n());
    std::iota(id.image.begin(), id.image.end(), 0);
    return id;
}

}  // namespace oracles
