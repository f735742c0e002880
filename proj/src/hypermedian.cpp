#include "peanocube/hypermedian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "peanocube/convexity.hpp"
#include "peanocube/euler.hpp"

namespace peanocube {

namespace {

// The unique x with I(u,v) n I(u,w) = I(u,x), if any.
int interval_corner(const Metric& m, int u, int v, int w) {
    Bitset inter = m.between(u, v) & m.between(u, w);
    for (int x = inter.first(); x >= 0; x = inter.first(x + 1)) {
        if (m.between(u, x) == inter) return x;
    }
    return -1;
}

bool is_metric_triangle(const Metric& m, int x, int y, int z) {
    Bitset xy = m.between(x, y), yz = m.between(y, z), zx = m.between(z, x);
    Bitset a = xy & yz;
    Bitset b = yz & zx;
    Bitset c = zx & xy;
    return a.count() == 1 && a.test(y) && b.count() == 1 && b.test(z) &&
           c.count() == 1 && c.test(x);
}

}  // namespace

MedianResult median_or_hyper_median(const Graph& g, int u, int v, int w) {
    Metric m(g);
    return median_or_hyper_median(g, m, u, v, w);
}

MedianResult median_or_hyper_median(const Graph& g, const Metric& m, int u, int v, int w) {
    MedianResult res;
    int x = interval_corner(m, u, v, w);
    if (x == -1) return res;
    int y = interval_corner(m, v, x, w);
    if (y == -1) return res;
    int z = interval_corner(m, w, x, y);
    if (z == -1) return res;
    if (x == y && y == z) {
        res.kind = MedianResult::Kind::Median;
        res.median = x;
        return res;
    }
    if (!is_metric_triangle(m, x, y, z)) return res;
    // quasi-median distance sums
    if (m.d(u, v) != m.d(u, x) + m.d(x, y) + m.d(y, v)) return res;
    if (m.d(v, w) != m.d(v, y) + m.d(y, z) + m.d(z, w)) return res;
    if (m.d(w, u) != m.d(w, z) + m.d(z, x) + m.d(x, u)) return res;
    Bitset seed(g.n());
    seed.set(x);
    seed.set(y);
    seed.set(z);
    Bitset hull = convex_hull(m, seed).members;
    auto sub = induced_subgraph(g, hull.to_vector());
    auto desc = is_quasi_hypertorus(sub.graph);
    if (!desc || !desc->is_hypertorus() || desc->k2_factors != 0) return res;
    res.kind = MedianResult::Kind::HyperMedian;
    res.triangle = {x, y, z};
    TorusDescriptor t = *desc;
    t.vertices.clear();
    for (int h : sub.to_host) t.vertices.push_back(h);
    std::sort(t.vertices.begin(), t.vertices.end());
    res.hull = std::move(t);
    return res;
}

namespace {

int common_edge_count(const std::vector<int>& a, const std::vector<int>& b, Edge* found) {
    int cnt = 0;
    for (size_t s = 0; s < a.size(); ++s) {
        int u = a[s], v = a[(s + 1) % a.size()];
        for (size_t t = 0; t < b.size(); ++t) {
            int p = b[t], q = b[(t + 1) % b.size()];
            if ((p == u && q == v) || (p == v && q == u)) {
                ++cnt;
                if (found) *found = {std::min(u, v), std::max(u, v)};
            }
        }
    }
    return cnt;
}

}  // namespace

namespace {

std::optional<Tricycle> tricycle_search(const std::vector<std::vector<int>>& cycles,
                                        int min_squares, int max_squares) {
    std::vector<const std::vector<int>*> pool;
    for (const auto& c : cycles) {
        if (c.size() >= 4) pool.push_back(&c);
    }
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i + 1; j < pool.size(); ++j) {
            Edge eij;
            if (common_edge_count(*pool[i], *pool[j], &eij) != 1) continue;
            for (size_t k = j + 1; k < pool.size(); ++k) {
                int squares = (pool[i]->size() == 4) + (pool[j]->size() == 4) +
                              (pool[k]->size() == 4);
                if (squares < min_squares || squares > max_squares) continue;
                Edge ejk, eik;
                if (common_edge_count(*pool[j], *pool[k], &ejk) != 1) continue;
                if (common_edge_count(*pool[i], *pool[k], &eik) != 1) continue;
                std::vector<int> si(*pool[i]), sj(*pool[j]), sk(*pool[k]);
                std::sort(si.begin(), si.end());
                std::sort(sj.begin(), sj.end());
                std::sort(sk.begin(), sk.end());
                std::vector<int> ij, ijk;
                std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                      std::back_inserter(ij));
                std::set_intersection(ij.begin(), ij.end(), sk.begin(), sk.end(),
                                      std::back_inserter(ijk));
                if (ijk.size() != 1) continue;
                Tricycle t;
                t.cycles = {*pool[i], *pool[j], *pool[k]};
                t.shared_vertex = ijk.front();
                t.shared_edges = {eij, ejk, eik};
                t.quasi = squares > 0;
                return t;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Tricycle> find_tricycle(const Graph&,
                                      const std::vector<std::vector<int>>& cycles) {
    return tricycle_search(cycles, 0, 0);
}

std::optional<Tricycle> find_quasi_tricycle(const Graph&,
                                            const std::vector<std::vector<int>>& cycles,
                                            int min_squares, int max_squares) {
    return tricycle_search(cycles, min_squares, max_squares);
}

std::optional<Tricycle> find_tricycle(const Graph& g) {
    Metric m(g);
    return find_tricycle(g, convex_cycles(g, m));
}

BoolWitness is_hyper_median(const Graph& g) {
    auto peano = is_peano(g);
    if (!peano.value) return {false, peano.witness};
    if (auto t = find_tricycle(g)) {
        return {false, "tricycle at vertex " + std::to_string(t->shared_vertex)};
    }
    return {true, ""};
}

// ---- Cyl+ -------------------------------------------------------------------

std::vector<VertexSet> cyl_plus_family(const Graph& g) {
    Metric m(g);
    ThetaClassification tc = theta_classes(g, m);
    std::vector<VertexSet> cylinders;
    for (const auto& [a, b] : tc.canonical_arcs) {
        for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
            for (const auto& bulge : bulges(g, m, arc)) {
                auto cyl = cylinder_of(g, m, bulge);
                if (std::find(cylinders.begin(), cylinders.end(), cyl.vertices) ==
                    cylinders.end())
                    cylinders.push_back(cyl.vertices);
            }
        }
    }
    // maximal hypercubes not inside any cylinder
    std::vector<VertexSet> cubes;
    for (const auto& t : enumerate_convex_tori(g, m)) {
        if (!t.cycle_factors.empty()) continue;
        cubes.push_back(t.vertices);
    }
    std::vector<VertexSet> out = cylinders;
    for (const auto& c : cubes) {
        bool maximal = true;
        for (const auto& c2 : cubes) {
            if (c2.size() > c.size() && std::includes(c2.begin(), c2.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        for (const auto& cyl : cylinders) {
            if (std::includes(cyl.begin(), cyl.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- decomposition ----------------------------------------------------------

namespace {

struct Decomposer {
    const Graph& host;
    DecompositionTree tree;

    int leaf_node(const VertexSet& verts) {
        auto sub = induced_subgraph(host, verts);
        auto desc = is_quasi_hypertorus(sub.graph);
        if (!desc) fail("CertificationFailed", "leaf is not a quasi-hypertorus");
        DecompositionNode nd;
        nd.leaf = true;
        nd.torus = *desc;
        nd.torus.vertices = verts;
        nd.vertices = verts;
        tree.nodes.push_back(std::move(nd));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    int amalgam_node(const VertexSet& verts, const VertexSet& left, const VertexSet& right,
                     const char* kind) {
        VertexSet shared;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                              std::back_inserter(shared));
        if (shared.empty() || left.size() >= verts.size() || right.size() >= verts.size())
            fail("CertificationFailed", std::string("degenerate amalgam split in ") + kind);
        // both parts must be gated in the union
        auto sub = induced_subgraph(host, verts);
        Metric msub(sub.graph);
        auto lift = [&](const VertexSet& vs) {
            Bitset b(sub.graph.n());
            for (int v : vs) b.set(sub.to_sub[v]);
            return b;
        };
        if (!is_gated(msub, lift(left)) || !is_gated(msub, lift(right)))
            fail("CertificationFailed", std::string("amalgam part not gated in the union (") +
                                            kind + ")");
        int l = build(left);
        int r = build(right);
        DecompositionNode nd;
        nd.vertices = verts;
        nd.shared = shared;
        nd.left = l;
        nd.right = r;
        tree.nodes.push_back(std::move(nd));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    struct Candidate {
        Bitset left, right;
        int shared_size = 0;
        bool clean = false;  // no maximal torus straddles the parts
        const char* kind = "";
    };

    // A split is admissible when both parts are proper and gated in the node.
    void consider(std::vector<Candidate>& cands, const Graph& s, const Metric& m,
                  const std::vector<Bitset>& max_tori, Bitset left, Bitset right,
                  const char* kind) {
        if (!left.any() || !right.any()) return;
        if (left.count() >= s.n() || right.count() >= s.n()) return;
        Bitset shared = left & right;
        if (!shared.any()) return;
        if ((left | right).count() != s.n()) return;
        if (!is_gated(m, left) || !is_gated(m, right)) return;
        bool clean = true;
        for (const auto& t : max_tori) {
            if (!left.contains(t) && !right.contains(t)) {
                clean = false;
                break;
            }
        }
        cands.push_back({std::move(left), std::move(right), shared.count(), clean, kind});
    }

    int build(const VertexSet& verts) {
        auto sub = induced_subgraph(host, verts);
        const Graph& s = sub.graph;
        auto to_host = [&](const Bitset& b) {
            VertexSet out;
            for (int v = b.first(); v >= 0; v = b.first(v + 1)) out.push_back(sub.to_host[v]);
            return out;
        };
        if (is_quasi_hypertorus(s)) return leaf_node(verts);

        Metric m(s);
        // cut vertex: amalgamate along it (always the smallest shared set)
        for (int v = 0; v < s.n(); ++v) {
            Bitset allowed = Bitset::full(s.n());
            allowed.reset(v);
            int rest = (v == 0) ? 1 : 0;
            Bitset comp = component_of(s, rest, allowed);
            if (comp.count() != s.n() - 1) {
                Bitset left = comp;
                left.set(v);
                Bitset right = Bitset::full(s.n());
                right -= comp;
                return amalgam_node(verts, to_host(left), to_host(right), "cut-vertex");
            }
        }

        // Candidate gated splits, all of the forms used in the decomposition
        // theorem's proof.  The literal case order can share a whole torus
        // between the parts (duplicating leaves) or pick a non-gated W side,
        // so every candidate is certified; splits that keep each maximal
        // torus on one side win, then the smallest shared set.
        std::vector<Bitset> max_tori;
        {
            auto tori = enumerate_convex_tori(s, m);
            for (const auto& t : tori) {
                bool maximal = true;
                for (const auto& t2 : tori) {
                    if (t2.vertices.size() > t.vertices.size() &&
                        std::includes(t2.vertices.begin(), t2.vertices.end(),
                                      t.vertices.begin(), t.vertices.end())) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) max_tori.push_back(Bitset::of(s.n(), t.vertices));
            }
        }
        std::vector<Candidate> cands;
        ThetaClassification tc = theta_classes(s, m);
        for (const auto& [ca, cb] : tc.canonical_arcs) {
            for (Arc arc : {Arc{ca, cb}, Arc{cb, ca}}) {
                auto [a, b] = arc;
                Bitset wab = w_set(s, m, a, b), wba = w_set(s, m, b, a);
                Bitset couab = convex_hull(m, u_set(s, m, a, b)).members;
                Bitset couba = convex_hull(m, u_set(s, m, b, a)).members;
                bool semi_ab = wab == couab, semi_ba = wba == couba;
                if (!semi_ab && !semi_ba && arc.first == ca) {
                    // split along G_->ab / G_->ba
                    consider(cands, s, m, max_tori, couab | wba, couba | wab,
                             "halfspace-pair");
                }
                if (!semi_ab && semi_ba) {
                    // split into G[W_ab] and G_ab-bar
                    consider(cands, s, m, max_tori, wab, couab | wba, "halfspace-semi");
                }
            }
        }
        // intersection-pattern splits over the Cyl+ family
        for (const auto& member : cyl_plus_family(s)) {
            Bitset h0 = Bitset::of(s.n(), member);
            Bitset rest(s.n());
            for (const auto& t : max_tori) {
                if (!(t == h0)) rest |= t;
            }
            consider(cands, s, m, max_tori, h0, rest, "family");
        }
        if (cands.empty()) fail("CertificationFailed", "no certified gated split found");
        const Candidate* best = &cands.front();
        for (const auto& c : cands) {
            auto key = [](const Candidate& x) {
                return std::tuple<int, int, int>(x.clean ? 0 : 1, x.shared_size,
                                                 x.left.count());
            };
            if (key(c) < key(*best)) best = &c;
        }
        return amalgam_node(verts, to_host(best->left), to_host(best->right), best->kind);
    }
};

}  // namespace

DecompositionTree decompose(const Graph& g) {
    auto hm = is_hyper_median(g);
    if (!hm.value) fail("NotHyperMedian", hm.witness);
    Decomposer dec{g, {}};
    VertexSet all;
    for (int v = 0; v < g.n(); ++v) all.push_back(v);
    dec.tree.root = dec.build(all);
    return dec.tree;
}

Graph reassemble(const Graph& host, const DecompositionTree& tree) {
    // edges covered by the leaves; sound decompositions cover all of E(G)
    std::vector<Edge> edges;
    for (const auto* t : tree.leaves()) {
        Bitset b = Bitset::of(host.n(), t->vertices);
        for (auto [u, v] : host.edges()) {
            if (b.test(u) && b.test(v)) edges.emplace_back(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(host.n(), std::move(edges));
}

// ---- Helly ------------------------------------------------------------------

int helly_number_oracle(const Graph& g, int cap) {
    if (g.n() > cap)
        fail("TooLargeForOracle", "Helly oracle capped at " + std::to_string(cap) + " vertices");
    if (g.n() < 2) return 1;
    Metric m(g);
    int n = g.n();
    std::vector<Bitset> hull_of(1u << n, Bitset(n));
    std::vector<char> done(1u << n, 0);
    auto hull = [&](unsigned mask) -> const Bitset& {
        if (!done[mask]) {
            Bitset seed(n);
            for (int v = 0; v < n; ++v) {
                if (mask & (1u << v)) seed.set(v);
            }
            hull_of[mask] = convex_hull(m, seed).members;
            done[mask] = 1;
        }
        return hull_of[mask];
    };
    // h(G) = max |F| over point sets F with empty intersection of the hulls
    // of the (|F|-1)-subsets (closure-system Helly characterization).
    int h = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size < 2 || size <= h) continue;
        Bitset inter = Bitset::full(n);
        for (int v = 0; v < n && inter.any(); ++v) {
            if (mask & (1u << v)) inter &= hull(mask & ~(1u << v));
        }
        if (!inter.any()) h = size;
    }
    return h;
}

int helly_number(const Graph& g, int oracle_cap) {
    if (g.n() < 2) fail("BadParams", "Helly number needs at least two vertices");
    if (is_peano(g).value) return is_median(g) ? 2 : 3;
    return helly_number_oracle(g, oracle_cap);
}

// ---- depth ------------------------------------------------------------------

DepthResult depth(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) fail("NotPartialCube", "depth is defined for partial cubes");
    Metric m(g);
    auto hs = half_spaces(g, m, *pc.theta);
    int k = static_cast<int>(hs.size());
    // longest chain under strict inclusion, counting members
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return hs[a].members.count() < hs[b].members.count();
    });
    std::vector<int> best(k, 1), pred(k, -1);
    DepthResult res;
    for (int oi = 0; oi < k; ++oi) {
        int i = order[oi];
        for (int oj = 0; oj < oi; ++oj) {
            int j = order[oj];
            if (hs[j].members.count() < hs[i].members.count() &&
                hs[i].members.contains(hs[j].members) && best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
                pred[i] = j;
            }
        }
    }
    int top = -1;
    for (int i = 0; i < k; ++i) {
        if (top == -1 || best[i] > best[top]) top = i;
    }
    if (top == -1) return res;  // K1
    res.depth = best[top];
    for (int i = top; i != -1; i = pred[i]) res.chain.push_back(hs[i].arc);
    std::reverse(res.chain.begin(), res.chain.end());
    return res;
}

VertexSet depth_witness_set(const Graph& g) {
    auto hm = is_hyper_median(g);
    if (!hm.value) fail("NotHyperMedian", hm.witness);
    auto dep = depth(g);
    if (dep.depth < 2) fail("DepthTooSmall", "depth witness needs depth >= 2");
    Metric m(g);
    ThetaClassification tc = theta_classes(g, m);
    auto hs = half_spaces(g, m, tc);
    int k = static_cast<int>(hs.size());

    // all maximal chains (paths of the Hasse diagram of strict inclusion)
    std::vector<std::vector<int>> succ(k), pred(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (hs[j].members.contains(hs[i].members) &&
                hs[i].members.count() < hs[j].members.count()) {
                bool covers = true;
                for (int t = 0; t < k && covers; ++t) {
                    if (t == i || t == j) continue;
                    if (hs[t].members.contains(hs[i].members) &&
                        hs[j].members.contains(hs[t].members) &&
                        hs[t].members.count() > hs[i].members.count() &&
                        hs[t].members.count() < hs[j].members.count())
                        covers = false;
                }
                if (covers) {
                    succ[i].push_back(j);
                    pred[j].push_back(i);
                }
            }
        }
    }
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (succ[v].empty()) {
            chains.push_back(cur);
        } else {
            for (int w : succ[v]) self(self, w);
        }
        cur.pop_back();
    };
    for (int i = 0; i < k; ++i) {
        if (pred[i].empty()) dfs(dfs, i);
    }

    Bitset a = Bitset::full(g.n());
    bool any_sigma = false;
    for (const auto& chain : chains) {
        // S(G) holds the maximum-length sequences; shorter non-extendable
        // chains would break the pairwise intersection of the A_sigma.
        if (static_cast<int>(chain.size()) != dep.depth || chain.size() < 2) continue;
        // top condition: the complement of the chain's top is a semi-periphery
        Arc top = hs[chain.back()].arc;
        Bitset w_top_rev = w_set(g, m, top.second, top.first);
        Bitset co_top = convex_hull(m, u_set(g, m, top.second, top.first)).members;
        if (!(w_top_rev == co_top)) continue;
        any_sigma = true;
        Arc second = hs[chain[1]].arc;  // chain lists W_{b a}; arc stored as (a,b)
        Bitset a_sigma = w_set(g, m, second.second, second.first) |
                         convex_hull(m, u_set(g, m, second.first, second.second)).members;
        a &= a_sigma;
    }
    if (!any_sigma || !a.any()) fail("CertificationFailed", "no A_sigma intersection");

    auto family = cyl_plus_family(g);
    auto meets_all = [&](const Bitset& b) {
        for (const auto& f : family) {
            if (!b.intersects(Bitset::of(g.n(), f))) return false;
        }
        return true;
    };
    if (!meets_all(a)) fail("CertificationFailed", "A misses a Cyl+ member");

    // greedy minimization with gatedness re-check
    Bitset cur_set = a;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = cur_set.first(); v >= 0; v = cur_set.first(v + 1)) {
            Bitset cand = cur_set;
            cand.reset(v);
            if (!cand.any()) continue;
            if (!is_gated(m, cand) || !meets_all(cand)) continue;
            cur_set = cand;
            changed = true;
            break;
        }
    }
    auto verts = cur_set.to_vector();
    auto sub = induced_subgraph(g, verts);
    if (depth(sub.graph).depth != dep.depth - 2)
        fail("CertificationFailed", "witness set has the wrong depth");
    return verts;
}

}  // namespace peanocube
