#include "peanocube/peano.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "peanocube/transform.hpp"

namespace peanocube {

std::vector<Bulge> bulges(const Graph& g, const Metric& m, Arc arc) {
    if (!is_partial_cube(g).ok) fail("NotPartialCube", "bulges need a partial cube host");
    Bitset u = u_set(g, m, arc.first, arc.second);
    Bitset cou = convex_hull(m, u).members;
    Bitset inner = cou - u;
    std::vector<Bulge> out;
    Bitset remaining = inner;
    while (remaining.any()) {
        int v = remaining.first();
        Bitset comp = component_of(g, v, inner);
        remaining -= comp;
        Bulge b;
        b.arc = arc;
        b.component = comp.to_vector();
        Bitset closure = comp;
        for (int x = comp.first(); x >= 0; x = comp.first(x + 1)) {
            for (int w : g.neighbors(x)) {
                if (cou.test(w)) closure.set(w);
            }
        }
        b.closure = closure.to_vector();
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Bulge& a, const Bulge& b) {
        return a.component < b.component;
    });
    return out;
}

std::vector<int> ab_cycle(const Graph& g, const Metric& m, Arc arc, int u) {
    auto path = associated_geodesic(g, m, arc, u);
    int v = path.front();
    // neighbor of v across the cut
    Bitset wba = w_set(g, m, arc.second, arc.first);
    int vp = -1;
    for (int w : g.neighbors(v)) {
        if (wba.test(w)) {
            vp = w;
            break;
        }
    }
    if (vp == -1) fail("StructureViolation", "endpoint has no neighbor across the cut");
    Bitset seed = Bitset::of(g.n(), path);
    seed.set(vp);
    Bitset cyc = convex_hull(m, seed).members;
    int size = cyc.count();
    // certify it induces a convex cycle of the right length
    if (size != 2 * (static_cast<int>(path.size())))
        fail("StructureViolation", "ab-cycle hull has wrong cardinality");
    auto verts = cyc.to_vector();
    for (int z : verts) {
        int deg = 0;
        for (int w : g.neighbors(z)) deg += cyc.test(w);
        if (deg != 2) fail("StructureViolation", "ab-cycle hull is not a cycle");
    }
    if (!is_gated(m, cyc)) fail("StructureViolation", "ab-cycle not gated");
    int start = verts.front();
    int prev = start, cur = -1;
    for (int w : g.neighbors(start)) {
        if (cyc.test(w)) cur = std::min(cur == -1 ? g.n() : cur, w);
    }
    std::vector<int> cycle{start};
    while (cur != start) {
        cycle.push_back(cur);
        for (int w : g.neighbors(cur)) {
            if (cyc.test(w) && w != prev) {
                prev = cur;
                cur = w;
                break;
            }
        }
    }
    return cycle;
}

namespace {

// Vertex set of the hypercylinder over a bulge: the bulge closure together
// with its phi-image across the cut.
Bitset cylinder_vertices(const Graph& g, const Metric&, const Bulge& bulge) {
    auto phi = phi_map(g, bulge.arc.first, bulge.arc.second);
    Bitset h = Bitset::of(g.n(), bulge.closure);
    for (int v : bulge.closure) {
        if (phi[v] == -1) fail("StructureViolation", "bulge vertex outside I(U_ab)");
        h.set(phi[v]);
    }
    return h;
}

}  // namespace

Hypercylinder cylinder_of(const Graph& g, const Metric& m, const Bulge& bulge) {
    if (bulge.component.empty()) fail("StructureViolation", "empty bulge");
    Hypercylinder cyl;
    Bitset h;
    try {
        h = cylinder_vertices(g, m, bulge);
    } catch (const Error& e) {
        fail("StructureViolation", std::string("no hypercylinder: ") + e.what());
    }
    cyl.vertices = h.to_vector();

    Bitset u = u_set(g, m, bulge.arc.first, bulge.arc.second);
    Bitset closure = Bitset::of(g.n(), bulge.closure);
    Bitset section = closure & u;
    int first = section.first();
    if (first < 0) fail("StructureViolation", "bulge closure misses U_ab");
    Bitset comp = component_of(g, first, section);
    cyl.cross_section = comp.to_vector();

    std::vector<int> cycle;
    try {
        cycle = ab_cycle(g, m, bulge.arc, bulge.component.front());
    } catch (const Error&) {
        fail("StructureViolation", "no ab-cycle through the bulge");
    }
    cyl.cycle_length = static_cast<int>(cycle.size());

    // certify H = C box A
    auto section_graph = induced_subgraph(g, cyl.cross_section);
    auto prod = cartesian_product({make_even_cycle(cyl.cycle_length), section_graph.graph});
    auto host = induced_subgraph(g, cyl.vertices);
    if (!are_isomorphic(host.graph, prod.graph))
        fail("StructureViolation", "cylinder is not the product of cycle and cross-section");
    if (!is_convex(m, h).convex) fail("StructureViolation", "cylinder not convex");
    if (!is_gated(m, h)) fail("StructureViolation", "cylinder not gated");

    // (HNB1) X = H - W_ba
    Bitset wba = w_set(g, m, bulge.arc.second, bulge.arc.first);
    if (!((h - wba) == closure)) fail("StructureViolation", "HNB1 fails: X != H - W_ba");

    // (HNB2) X - U_ab separates G[co(U_ab)]
    Bitset cou = convex_hull(m, u).members;
    Bitset sep = closure - u;
    Bitset rest = cou - sep;
    int r0 = rest.first();
    if (r0 >= 0) {
        Bitset reach = component_of(g, r0, rest);
        if (reach == rest) fail("StructureViolation", "HNB2 fails: bulge interior does not separate");
    }

    // layers: the cycle layer through each cross-section vertex
    for (int a : cyl.cross_section) {
        std::vector<int> layer;
        try {
            // a lies in U_ab; its layer is the ab-cycle of the bulge vertex
            // adjacent to it, or the cycle itself when a is on it
            if (std::find(cycle.begin(), cycle.end(), a) != cycle.end()) {
                layer = cycle;
            } else {
                int inner = -1;
                for (int w : g.neighbors(a)) {
                    if (std::find(bulge.component.begin(), bulge.component.end(), w) !=
                        bulge.component.end()) {
                        inner = w;
                        break;
                    }
                }
                if (inner == -1) fail("StructureViolation", "cross-section vertex off the bulge");
                layer = ab_cycle(g, m, bulge.arc, inner);
            }
        } catch (const Error&) {
            fail("StructureViolation", "missing cycle layer");
        }
        cyl.layers.push_back(std::move(layer));
    }
    return cyl;
}

std::vector<Arc> semi_peripheries(const Graph& g, const Metric& m,
                                  const ThetaClassification& tc) {
    if (!is_partial_cube(g).ok) fail("NotPartialCube", "semi-peripheries need a partial cube");
    std::vector<Arc> out;
    auto hs = half_spaces(g, m, tc);
    for (const auto& [a, b] : tc.canonical_arcs) {
        for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
            Bitset w = w_set(g, m, arc.first, arc.second);
            Bitset cou = convex_hull(m, u_set(g, m, arc.first, arc.second)).members;
            bool semi = (w == cou);
            // Cross-check: semi-peripheries are the minimal non-empty
            // half-spaces.
            bool minimal = true;
            for (const auto& h : hs) {
                if (!(h.members == w) && w.contains(h.members)) {
                    minimal = false;
                    break;
                }
            }
            if (semi != minimal)
                fail("StructureViolation", "semi-periphery / minimal half-space mismatch");
            if (semi) out.push_back(arc);
        }
    }
    return out;
}

BoolWitness is_peano(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) return {false, "not a partial cube (" + pc.failure + ")"};
    Metric m(g);
    for (const auto& [a, b] : pc.theta->canonical_arcs) {
        for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
            if (!is_strongly_ph_stable(g, m, arc)) {
                return {false, "arc " + std::to_string(arc.first) + "->" +
                                   std::to_string(arc.second) + " not strongly ph-stable"};
            }
        }
    }
    return {true, ""};
}

bool is_median(const Graph& g) {
    if (!g.is_connected()) fail("Disconnected", "median test needs a connected graph");
    Metric m(g);
    int n = g.n();
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            for (int w = v; w < n; ++w) {
                Bitset med = m.between(u, v);
                med &= m.between(v, w);
                med &= m.between(u, w);
                if (med.count() != 1) return false;
            }
        }
    }
    return true;
}

bool is_netlike(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) fail("NotPartialCube", "netlike test needs a partial cube");
    Metric m(g);
    for (const auto& [a, b] : pc.theta->canonical_arcs) {
        for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
            Bitset u = u_set(g, m, arc.first, arc.second);
            Bitset cou = convex_hull(m, u).members;
            // every cycle of G[co(U)] must be a cycle of G[U]: no vertex of
            // co(U) - U may lie on a cycle of G[co(U)]
            Bitset inner = cou - u;
            for (int v = inner.first(); v >= 0; v = inner.first(v + 1)) {
                std::vector<int> nb;
                for (int w : g.neighbors(v)) {
                    if (cou.test(w)) nb.push_back(w);
                }
                Bitset allowed = cou;
                allowed.reset(v);
                for (size_t i = 0; i < nb.size(); ++i) {
                    Bitset comp = component_of(g, nb[i], allowed);
                    for (size_t j = i + 1; j < nb.size(); ++j) {
                        if (comp.test(nb[j])) return false;  // v lies on a cycle
                    }
                }
            }
        }
    }
    return true;
}

bool is_cube_free_netlike(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) fail("NotPartialCube", "cube-free netlike test needs a partial cube");
    Metric m(g);
    for (const auto& [a, b] : pc.theta->canonical_arcs) {
        for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
            Bitset iu = prehull_step(m, u_set(g, m, arc.first, arc.second));
            auto sub = induced_subgraph(g, iu.to_vector());
            if (!sub.graph.is_connected()) return false;
            if (sub.graph.m() != sub.graph.n() - 1) return false;  // tree test
        }
    }
    return true;
}

std::vector<std::vector<int>> isometric_cycles(const Graph& g, const Metric& m, size_t cap) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;  // canonical sorted vertex sets
    int n = g.n();
    size_t work = 0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            int d = m.d(x, y);
            if (d < 2 || d == kUnreachable) continue;
            auto geos = detail::geodesics_between(g, m, x, y, cap);
            work += geos.size() * geos.size();
            if (work > cap) fail("TooLarge", "isometric cycle enumeration exceeded cap");
            for (size_t i = 0; i < geos.size(); ++i) {
                for (size_t j = i + 1; j < geos.size(); ++j) {
                    const auto &p = geos[i], &q = geos[j];
                    bool disjoint = true;
                    for (size_t t = 1; t + 1 < p.size() && disjoint; ++t) {
                        for (size_t s = 1; s + 1 < q.size(); ++s) {
                            if (p[t] == q[s]) {
                                disjoint = false;
                                break;
                            }
                        }
                    }
                    if (!disjoint) continue;
                    // cycle = p followed by reverse(q) minus endpoints
                    std::vector<int> cycle = p;
                    for (size_t s = q.size() - 2; s >= 1; --s) cycle.push_back(q[s]);
                    std::vector<int> key = cycle;
                    std::sort(key.begin(), key.end());
                    if (seen.count(key)) continue;
                    int len = static_cast<int>(cycle.size());
                    bool isometric = true;
                    for (int s = 0; s < len && isometric; ++s) {
                        for (int t = s + 1; t < len; ++t) {
                            int dc = std::min(t - s, len - (t - s));
                            if (m.d(cycle[s], cycle[t]) != dc) {
                                isometric = false;
                                break;
                            }
                        }
                    }
                    if (!isometric) continue;
                    seen.insert(key);
                    // canonical rotation: least vertex first, smaller neighbor second
                    auto it = std::min_element(cycle.begin(), cycle.end());
                    std::rotate(cycle.begin(), it, cycle.end());
                    if (cycle[1] > cycle.back()) {
                        std::reverse(cycle.begin() + 1, cycle.end());
                    }
                    out.push_back(std::move(cycle));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_cellular(const Graph& g) {
    if (!is_bipartite(g).bipartite) return false;
    if (!g.is_connected()) fail("Disconnected", "cellular test needs a connected graph");
    // The tricycle-free + gated-isometric-cycles conditions characterize
    // cellularity only over Peano hosts (on a partial cube with pre-hull
    // number 2 they can both hold); cellular graphs are Peano, so guard.
    if (!is_peano(g).value) return false;
    Metric m(g);
    auto cycles = convex_cycles(g, m);
    // tricycle-free, via the shared convex-cycle search
    std::vector<std::vector<int>> big;
    for (const auto& c : cycles) {
        if (c.size() > 4) big.push_back(c);
    }
    for (size_t i = 0; i < big.size(); ++i) {
        for (size_t j = i + 1; j < big.size(); ++j) {
            for (size_t k = j + 1; k < big.size(); ++k) {
                // pairwise exactly one common edge, all share one vertex
                auto common_edges = [&](const std::vector<int>& a, const std::vector<int>& b) {
                    int cnt = 0;
                    for (size_t s = 0; s < a.size(); ++s) {
                        int u = a[s], v = a[(s + 1) % a.size()];
                        for (size_t t = 0; t < b.size(); ++t) {
                            if ((b[t] == u && b[(t + 1) % b.size()] == v) ||
                                (b[t] == v && b[(t + 1) % b.size()] == u))
                                ++cnt;
                        }
                    }
                    return cnt;
                };
                if (common_edges(big[i], big[j]) != 1 || common_edges(big[j], big[k]) != 1 ||
                    common_edges(big[i], big[k]) != 1)
                    continue;
                std::vector<int> si(big[i]), sj(big[j]), sk(big[k]);
                std::sort(si.begin(), si.end());
                std::sort(sj.begin(), sj.end());
                std::sort(sk.begin(), sk.end());
                std::vector<int> ij, ijk;
                std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                      std::back_inserter(ij));
                std::set_intersection(ij.begin(), ij.end(), sk.begin(), sk.end(),
                                      std::back_inserter(ijk));
                if (ijk.size() == 1) return false;  // tricycle found
            }
        }
    }
    for (const auto& cycle : isometric_cycles(g, m)) {
        if (!is_gated(m, Bitset::of(g.n(), cycle))) return false;
    }
    return true;
}

std::optional<TorusDescriptor> is_quasi_hypertorus(const Graph& g) {
    if (g.n() == 0) fail("EmptyGraph", "empty graph");
    if (g.n() == 1) {
        TorusDescriptor t;
        t.vertices = {0};
        return t;
    }
    if (!g.is_regular()) return std::nullopt;
    if (!is_peano(g).value) return std::nullopt;

    // Factor peeling; the final isomorphism check certifies the multiset.
    TorusDescriptor desc;
    for (int v = 0; v < g.n(); ++v) desc.vertices.push_back(v);
    Graph cur = g;
    while (cur.n() > 1) {
        Metric m(cur);
        ThetaClassification tc = theta_classes(cur, m);
        // prefer a periphery split (K2 factor)
        bool split = false;
        for (const auto& [a, b] : tc.canonical_arcs) {
            Bitset wab = w_set(cur, m, a, b), uab = u_set(cur, m, a, b);
            Bitset wba = w_set(cur, m, b, a), uba = u_set(cur, m, b, a);
            if (wab == uab && wba == uba) {
                desc.k2_factors += 1;
                cur = induced_subgraph(cur, wab.to_vector()).graph;
                split = true;
                break;
            }
        }
        if (split) continue;
        // else: lexicographically least semi-periphery arc's cycle factor
        Arc arc{-1, -1};
        for (auto [u, v] : cur.edges()) {
            for (Arc cand : {Arc{u, v}, Arc{v, u}}) {
                Bitset w = w_set(cur, m, cand.first, cand.second);
                Bitset cou = convex_hull(m, u_set(cur, m, cand.first, cand.second)).members;
                if (w == cou) {
                    arc = cand;
                    break;
                }
            }
            if (arc.first != -1) break;
        }
        if (arc.first == -1) return std::nullopt;
        auto blist = bulges(cur, m, arc);
        if (blist.empty()) return std::nullopt;
        Hypercylinder cyl;
        try {
            cyl = cylinder_of(cur, m, blist.front());
        } catch (const Error&) {
            return std::nullopt;
        }
        if (static_cast<int>(cyl.vertices.size()) != cur.n()) return std::nullopt;
        desc.cycle_factors.push_back(cyl.cycle_length);
        cur = induced_subgraph(cur, cyl.cross_section).graph;
    }
    std::sort(desc.cycle_factors.begin(), desc.cycle_factors.end());

    std::vector<Graph> factors;
    for (int i = 0; i < desc.k2_factors; ++i) factors.push_back(make_hypercube(1));
    for (int len : desc.cycle_factors) factors.push_back(make_even_cycle(len));
    if (factors.empty()) {
        if (g.n() != 1) return std::nullopt;
    } else if (!are_isomorphic(g, cartesian_product(factors).graph)) {
        return std::nullopt;
    }
    return desc;
}

AntipodalResult is_antipodal(const Graph& g) {
    if (!g.is_connected()) fail("Disconnected", "antipodality needs a connected graph");
    Metric m(g);
    AntipodalResult res;
    res.antipode.assign(g.n(), -1);
    res.antipodal = true;
    for (int x = 0; x < g.n(); ++x) {
        for (int y = 0; y < g.n(); ++y) {
            if (m.between(x, y).count() == g.n()) {
                res.antipode[x] = y;
                break;
            }
        }
        if (res.antipode[x] == -1) res.antipodal = false;
    }
    return res;
}

bool is_bulge_regular(const Graph& g) {
    auto peano = is_peano(g);
    if (!peano.value) fail("NotPeano", "bulge-regularity is defined for Peano hosts");
    Metric m(g);
    ThetaClassification tc = theta_classes(g, m);
    for (const auto& [a, b] : tc.canonical_arcs) {
        for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
            for (const auto& bulge : bulges(g, m, arc)) {
                auto sub = induced_subgraph(g, bulge.closure);
                Bitset u = u_set(g, m, arc.first, arc.second);
                int deg = -1;
                for (int v : bulge.component) {
                    (void)u;
                    int d = sub.graph.degree(sub.to_sub[v]);
                    if (deg == -1) deg = d;
                    if (d != deg) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace peanocube
