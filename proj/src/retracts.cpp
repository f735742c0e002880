#include "peanocube/retracts.hpp"

#include <algorithm>
#include <numeric>

#include "peanocube/convexity.hpp"
#include "peanocube/euler.hpp"
#include "peanocube/hypermedian.hpp"

namespace peanocube {

bool is_contraction(const Graph& g, const SelfMap& f) {
    if (static_cast<int>(f.image.size()) != g.n()) return false;
    for (int v : f.image) {
        if (v < 0 || v >= g.n()) return false;
    }
    for (auto [u, v] : g.edges()) {
        int a = f.image[u], b = f.image[v];
        if (a != b && !g.has_edge(a, b)) return false;
    }
    return true;
}

bool is_retraction(const Graph& g, const SelfMap& f) {
    if (!is_contraction(g, f)) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (f.image[f.image[v]] != f.image[v]) return false;
    }
    return true;
}

bool is_automorphism(const Graph& g, const SelfMap& f) {
    if (static_cast<int>(f.image.size()) != g.n()) return false;
    std::vector<char> hit(g.n(), 0);
    for (int v : f.image) {
        if (v < 0 || v >= g.n() || hit[v]) return false;
        hit[v] = 1;
    }
    for (auto [u, v] : g.edges()) {
        if (!g.has_edge(f.image[u], f.image[v])) return false;
    }
    return true;
}

namespace {

void automorphism_search(const Graph& g, const std::vector<std::vector<int>>& prof,
                         std::vector<int>& map, std::vector<char>& used, int pos,
                         std::vector<SelfMap>& out) {
    if (pos == g.n()) {
        out.push_back({map});
        return;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (used[w] || prof[pos] != prof[w]) continue;
        bool ok = true;
        for (int u = 0; u < pos && ok; ++u) {
            if (g.has_edge(u, pos) != g.has_edge(map[u], w)) ok = false;
        }
        if (!ok) continue;
        map[pos] = w;
        used[w] = 1;
        automorphism_search(g, prof, map, used, pos + 1, out);
        map[pos] = -1;
        used[w] = 0;
    }
}

std::vector<std::vector<int>> vertex_profiles(const Graph& g) {
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

}  // namespace

std::vector<SelfMap> automorphisms(const Graph& g, int max_n) {
    if (g.n() > max_n) fail("TooLarge", "automorphism search capped");
    std::vector<SelfMap> out;
    if (g.n() == 0) return out;
    auto prof = vertex_profiles(g);
    std::vector<int> map(g.n(), -1);
    std::vector<char> used(g.n(), 0);
    automorphism_search(g, prof, map, used, 0, out);
    return out;
}

VertexSet periodic_part(const Graph& g, const SelfMap& f) {
    if (!is_contraction(g, f)) fail("NotContraction", "periodic part needs a contraction");
    // vertices on cycles of the functional digraph
    std::vector<int> state(g.n(), 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<char> periodic(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (state[s]) continue;
        std::vector<int> path;
        int v = s;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = f.image[v];
        }
        if (state[v] == 1) {
            // found a new cycle; mark from v onward
            bool in_cycle = false;
            for (int u : path) {
                if (u == v) in_cycle = true;
                if (in_cycle) periodic[u] = 1;
            }
        }
        for (int u : path) state[u] = 2;
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        if (periodic[v]) out.push_back(v);
    }
    return out;
}

VertexSet minimal_convex_extension(const Graph& g, const VertexSet& f, int u) {
    Metric m(g);
    Bitset fb = Bitset::of(g.n(), f);
    if (!is_convex(m, fb).convex) fail("BadParams", "extension base must be convex");
    bool adjacent = false;
    for (int w : g.neighbors(u)) adjacent |= fb.test(w);
    if (!adjacent || fb.test(u)) fail("NotNeighbor", "vertex must be adjacent to and outside the set");
    Bitset seed = fb;
    seed.set(u);
    Bitset ext = prehull_step(m, seed);
    if (!is_convex(m, ext).convex)
        fail("NotPeano", "I({u} u F) is not convex; host is not Peano at this edge");
    return ext.to_vector();
}

namespace {

// Next extension vertex: the least neighbor of the current set.
int least_neighbor(const Graph& g, const Bitset& f) {
    for (int v = 0; v < g.n(); ++v) {
        if (f.test(v)) continue;
        for (int w : g.neighbors(v)) {
            if (f.test(w)) return v;
        }
    }
    return -1;
}

bool has_theta_copy_in(const Graph& g, const Metric&, const ThetaClassification& tc,
                       const std::vector<int>& cycle, const Bitset& f) {
    // Walk the class sequence of the cycle from each start vertex in f; class
    // continuation is unique because incident edges are never
    // Theta-equivalent in a partial cube.
    std::vector<int> cls;
    for (size_t i = 0; i < cycle.size(); ++i) {
        cls.push_back(tc.edge_class[g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()])]);
    }
    for (int start = f.first(); start >= 0; start = f.first(start + 1)) {
        int cur = start;
        bool ok = true;
        for (size_t i = 0; i < cls.size(); ++i) {
            int next = -1;
            for (int w : g.neighbors(cur)) {
                if (!f.test(w)) continue;
                if (tc.edge_class[g.edge_index(cur, w)] == cls[i]) {
                    next = w;
                    break;
                }
            }
            if (next == -1) {
                ok = false;
                break;
            }
            cur = next;
        }
        if (ok && cur == start) return true;
    }
    return false;
}

bool is_cycle_representative(const Graph& g, const Metric& m, const Bitset& f) {
    ThetaClassification tc = theta_classes(g, m);
    for (const auto& cycle : isometric_cycles(g, m)) {
        if (cycle.size() <= 4) continue;
        if (!has_theta_copy_in(g, m, tc, cycle, f)) return false;
    }
    return true;
}

}  // namespace

SelfMap mooring_onto(const Graph& g, const VertexSet& f) {
    Metric m(g);
    Bitset fb = Bitset::of(g.n(), f);
    if (!fb.any()) fail("EmptyTarget", "mooring target must be non-empty");
    if (!is_convex(m, fb).convex) fail("BadParams", "mooring target must be convex");
    if (!is_cycle_representative(g, m, fb) && !is_median(g))
        fail("NotCycleRepresentative",
             "target is not cycle-representative and the host is not median");

    SelfMap mu;
    mu.image.assign(g.n(), -1);
    for (int v : f) mu.image[v] = v;
    Bitset cur = fb;
    while (cur.count() < g.n()) {
        int u = least_neighbor(g, cur);
        if (u == -1) fail("Disconnected", "mooring needs a connected host");
        Bitset ext = Bitset::of(g.n(), minimal_convex_extension(g, cur.to_vector(), u));
        Bitset added = ext - cur;
        for (int x = added.first(); x >= 0; x = added.first(x + 1)) {
            int nb = -1;
            for (int w : g.neighbors(x)) {
                if (cur.test(w)) {
                    if (nb != -1) fail("CertificationFailed", "extension vertex with two back-neighbors");
                    nb = w;
                }
            }
            if (nb == -1) fail("CertificationFailed", "extension vertex with no back-neighbor");
            mu.image[x] = nb;
        }
        cur = ext;
    }
    // resolve to the chain: mu currently maps each vertex one step down; that
    // is exactly the mooring map.
    if (!verify_mooring(g, f, mu)) fail("CertificationFailed", "constructed map is not a mooring");
    return mu;
}

bool verify_mooring(const Graph& g, const VertexSet& f, const SelfMap& mu) {
    if (static_cast<int>(mu.image.size()) != g.n()) return false;
    Metric m(g);
    Bitset fb = Bitset::of(g.n(), f);
    if (!is_gated(m, fb)) return false;
    if (!is_contraction(g, mu)) return false;
    for (int v : f) {
        if (mu.image[v] != v) return false;
    }
    for (int u = 0; u < g.n(); ++u) {
        if (fb.test(u)) continue;
        int gu = *gate_of(m, fb, u);
        if (!g.has_edge(u, mu.image[u])) return false;
        if (!m.on_geodesic(u, mu.image[u], gu)) return false;
    }
    return true;
}

SelfMap retraction_onto_convex(const Graph& g, const VertexSet& f) {
    Metric m(g);
    Bitset fb = Bitset::of(g.n(), f);
    if (!fb.any()) fail("EmptyTarget", "retraction target must be non-empty");
    if (!is_convex(m, fb).convex) fail("BadParams", "retraction target must be convex");

    // extension chain F = F_0 subset F_1 subset ... = G
    std::vector<Bitset> chain{fb};
    while (chain.back().count() < g.n()) {
        int u = least_neighbor(g, chain.back());
        if (u == -1) fail("Disconnected", "retraction needs a connected host");
        chain.push_back(Bitset::of(g.n(), minimal_convex_extension(g, chain.back().to_vector(), u)));
    }
    // fold step by step with phi along the separating class
    SelfMap r;
    r.image.assign(g.n(), 0);
    std::iota(r.image.begin(), r.image.end(), 0);
    for (int step = static_cast<int>(chain.size()) - 1; step >= 1; --step) {
        const Bitset& big = chain[step];
        const Bitset& small = chain[step - 1];
        auto sub = induced_subgraph(g, big.to_vector());
        // the fold arc: any edge from big-small into small
        int u = -1, v = -1;
        Bitset diff = big - small;
        for (int x = diff.first(); x >= 0 && u == -1; x = diff.first(x + 1)) {
            for (int w : g.neighbors(x)) {
                if (small.test(w)) {
                    u = x;
                    v = w;
                    break;
                }
            }
        }
        auto phi = phi_map(sub.graph, sub.to_sub[u], sub.to_sub[v]);
        std::vector<int> fold(g.n());
        std::iota(fold.begin(), fold.end(), 0);
        for (int x = diff.first(); x >= 0; x = diff.first(x + 1)) {
            int px = phi[sub.to_sub[x]];
            if (px == -1) fail("NotPeano", "fold undefined on extension layer");
            fold[x] = sub.to_host[px];
        }
        for (int x = 0; x < g.n(); ++x) r.image[x] = fold[r.image[x]];
    }
    if (!is_retraction(g, r)) fail("CertificationFailed", "composed fold is not a retraction");
    for (int v = 0; v < g.n(); ++v) {
        if (fb.test(v) != (r.image[v] == v)) fail("CertificationFailed", "retraction image mismatch");
    }
    return r;
}

bool is_strongly_faithful(const Graph& g, const VertexSet& f) {
    if (!is_peano(g).value) fail("NotPeano", "strong faithfulness is defined on Peano hosts");
    Metric m(g);
    Bitset fb = Bitset::of(g.n(), f);
    // isometric
    auto sub = induced_subgraph(g, f);
    if (!sub.graph.is_connected()) return false;
    DistanceMatrix dsub(sub.graph);
    for (int i = 0; i < sub.graph.n(); ++i) {
        for (int j = i + 1; j < sub.graph.n(); ++j) {
            if (dsub.at(i, j) != m.d(sub.to_host[i], sub.to_host[j])) return false;
        }
    }
    // strongly median-stable
    for (size_t a = 0; a < f.size(); ++a) {
        for (size_t b = a; b < f.size(); ++b) {
            for (size_t c = b; c < f.size(); ++c) {
                auto res = median_or_hyper_median(g, m, f[a], f[b], f[c]);
                if (res.kind == MedianResult::Kind::Median && !fb.test(res.median)) return false;
                if (res.kind == MedianResult::Kind::HyperMedian) {
                    for (int x : res.triangle) {
                        if (!fb.test(x)) return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<TorusDescriptor> maximal_gated_tori(const Graph& g) {
    if (!is_peano(g).value) fail("NotPeano", "gated torus enumeration needs a Peano host");
    Metric m(g);
    auto tori = enumerate_convex_tori(g, m);
    // convex tori of a Peano host are gated; keep the inclusion-maximal ones
    std::vector<TorusDescriptor> out;
    for (const auto& t : tori) {
        bool maximal = true;
        for (const auto& t2 : tori) {
            if (t2.vertices.size() > t.vertices.size() &&
                std::includes(t2.vertices.begin(), t2.vertices.end(), t.vertices.begin(),
                              t.vertices.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(t);
    }
    return out;
}

Graph diamond_graph(const Graph& g) {
    auto tori = maximal_gated_tori(g);
    std::vector<Edge> edges;
    for (const auto& t : tori) {
        for (size_t i = 0; i < t.vertices.size(); ++i) {
            for (size_t j = i + 1; j < t.vertices.size(); ++j) {
                edges.emplace_back(t.vertices[i], t.vertices[j]);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.n(), std::move(edges));
}

TorusIntersectionGraph torus_intersection_graph(const Graph& g) {
    TorusIntersectionGraph out;
    out.tori = maximal_gated_tori(g);
    std::vector<Edge> edges;
    for (size_t i = 0; i < out.tori.size(); ++i) {
        for (size_t j = i + 1; j < out.tori.size(); ++j) {
            VertexSet inter;
            std::set_intersection(out.tori[i].vertices.begin(), out.tori[i].vertices.end(),
                                  out.tori[j].vertices.begin(), out.tori[j].vertices.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    out.graph = Graph(static_cast<int>(out.tori.size()), std::move(edges));
    return out;
}

Dismantling is_dismantlable(const Graph& g) {
    Dismantling out;
    std::vector<char> removed(g.n(), 0);
    int remaining = g.n();
    if (remaining == 0) return out;
    bool progress = true;
    while (remaining > 1 && progress) {
        progress = false;
        for (int x = 0; x < g.n() && !progress; ++x) {
            if (removed[x]) continue;
            for (int y = 0; y < g.n(); ++y) {
                if (y == x || removed[y]) continue;
                // N[x] subset N[y] within the remaining graph
                bool dominated = g.has_edge(x, y) || x == y;
                if (!dominated) continue;
                dominated = true;
                for (int w : g.neighbors(x)) {
                    if (removed[w] || w == y) continue;
                    if (w != y && !g.has_edge(w, y)) {
                        dominated = false;
                        break;
                    }
                }
                if (dominated) {
                    removed[x] = 1;
                    out.order.push_back(x);
                    --remaining;
                    progress = true;
                    break;
                }
            }
        }
    }
    if (remaining == 1) {
        for (int v = 0; v < g.n(); ++v) {
            if (!removed[v]) out.order.push_back(v);
        }
        out.dismantlable = true;
    }
    return out;
}

TorusDescriptor fixed_torus_under_automorphisms(const Graph& g) {
    if (!is_peano(g).value) fail("NotPeano", "fixed torus search needs a Peano host");
    Metric m(g);
    auto tori = enumerate_convex_tori(g, m);
    auto auts = automorphisms(g);
    std::sort(tori.begin(), tori.end(), [](const TorusDescriptor& a, const TorusDescriptor& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    for (const auto& t : tori) {
        Bitset b = Bitset::of(g.n(), t.vertices);
        bool invariant = true;
        for (const auto& sigma : auts) {
            for (int v : t.vertices) {
                if (!b.test(sigma.image[v])) {
                    invariant = false;
                    break;
                }
            }
            if (!invariant) break;
        }
        if (invariant) return t;
    }
    fail("CertificationFailed", "no invariant gated quasi-hypertorus found");
}

TorusDescriptor fixed_torus_under_contraction(const Graph& g, const SelfMap& f) {
    if (!is_peano(g).value) fail("NotPeano", "fixed torus search needs a Peano host");
    if (!is_contraction(g, f)) fail("NotContraction", "self-map is not a contraction");
    VertexSet per = periodic_part(g, f);
    auto sub = induced_subgraph(g, per);
    // f restricted to the periodic part permutes it
    TorusDescriptor inner = fixed_torus_under_automorphisms(sub.graph);
    TorusDescriptor out = inner;
    out.vertices.clear();
    for (int v : inner.vertices) out.vertices.push_back(sub.to_host[v]);
    std::sort(out.vertices.begin(), out.vertices.end());
    // certify invariance and gatedness in the host
    Bitset b = Bitset::of(g.n(), out.vertices);
    for (int v : out.vertices) {
        if (!b.test(f.image[v])) fail("CertificationFailed", "torus not fixed by the contraction");
    }
    Metric m(g);
    if (!is_gated(m, b)) fail("CertificationFailed", "fixed torus not gated in the host");
    return out;
}

}  // namespace peanocube
