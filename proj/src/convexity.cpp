#include "peanocube/convexity.hpp"

#include <algorithm>
#include <map>

namespace peanocube {

Bitset prehull_step(const Metric& m, const Bitset& a) {
    Bitset out = a;
    auto members = a.to_vector();
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            if (m.d(members[i], members[j]) == kUnreachable) continue;
            out |= m.between(members[i], members[j]);
        }
    }
    return out;
}

VertexSet prehull_step(const Graph& g, const VertexSet& a) {
    Metric m(g);
    return prehull_step(m, Bitset::of(g.n(), a)).to_vector();
}

HullResult convex_hull(const Metric& m, const Bitset& a) {
    HullResult res{a, 0};
    while (true) {
        Bitset next = prehull_step(m, res.members);
        if (next == res.members) return res;
        res.members = std::move(next);
        ++res.iterations;
    }
}

HullResult convex_hull(const Graph& g, const VertexSet& a) {
    Metric m(g);
    return convex_hull(m, Bitset::of(g.n(), a));
}

ConvexityCheck is_convex(const Metric& m, const Bitset& a) {
    ConvexityCheck res;
    auto members = a.to_vector();
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            int x = members[i], y = members[j];
            if (m.d(x, y) == kUnreachable) continue;
            if (!a.contains(m.between(x, y))) {
                res.convex = false;
                res.witness = {x, y};
                return res;
            }
        }
    }
    return res;
}

ConvexityCheck is_convex(const Graph& g, const VertexSet& a) {
    Metric m(g);
    return is_convex(m, Bitset::of(g.n(), a));
}

std::vector<HalfSpace> half_spaces(const Graph& g, const Metric& m, const ThetaClassification& tc) {
    std::vector<HalfSpace> out;
    out.reserve(2 * tc.class_count());
    for (const auto& [a, b] : tc.canonical_arcs) {
        out.push_back({{a, b}, w_set(g, m, a, b)});
        out.push_back({{b, a}, w_set(g, m, b, a)});
    }
    return out;
}

int prehull_number(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) fail("NotPartialCube", "pre-hull number is computed for partial cubes");
    Metric m(g);
    auto hs = half_spaces(g, m, *pc.theta);
    int ph = 0;
    for (const auto& h : hs) {
        // h is a copoint exactly at the x outside h with no half-space
        // strictly between; attachment is the same hull for all such x.
        for (int x = 0; x < g.n(); ++x) {
            if (h.members.test(x)) continue;
            bool copoint_at_x = true;
            for (const auto& h2 : hs) {
                if (h2.members.test(x)) continue;
                if (h2.members.contains(h.members) && !(h2.members == h.members)) {
                    copoint_at_x = false;
                    break;
                }
            }
            if (!copoint_at_x) continue;
            Bitset seed = h.members;
            seed.set(x);
            ph = std::max(ph, convex_hull(m, seed).iterations);
        }
    }
    return ph;
}

PhStability is_ph_stable(const Graph& g, const Metric& m, Arc arc) {
    Bitset u = u_set(g, m, arc.first, arc.second);
    Bitset iu = prehull_step(m, u);
    auto iu_members = iu.to_vector();
    auto u_members = u.to_vector();
    for (int a : iu_members) {
        for (int b : iu_members) {
            if (a == b) continue;
            bool ok = false;
            for (int w : u_members) {
                if (m.on_geodesic(a, b, w)) {  // b on an (a,w)-geodesic
                    ok = true;
                    break;
                }
            }
            if (!ok) return {false, {a, b}};
        }
    }
    return {};
}

namespace detail {

std::vector<std::vector<int>> geodesics_between(const Graph& g, const Metric& m, int x, int y,
                                                size_t cap) {
    std::vector<std::vector<int>> out;
    if (m.d(x, y) == kUnreachable) return out;
    std::vector<int> path{x};
    // DFS over the interval DAG toward y, neighbors in ascending order so the
    // lexicographically least sequence comes first.
    std::vector<std::pair<int, size_t>> stack;  // (vertex, neighbor idx)
    stack.push_back({x, 0});
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (v == y) {
            out.push_back(path);
            if (out.size() >= cap) fail("TooLarge", "geodesic enumeration exceeded cap");
            stack.pop_back();
            path.pop_back();
            continue;
        }
        const auto& nb = g.neighbors(v);
        bool advanced = false;
        while (idx < nb.size()) {
            int w = nb[idx++];
            if (m.d(v, y) == m.d(w, y) + 1) {
                stack.push_back({w, 0});
                path.push_back(w);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            stack.pop_back();
            path.pop_back();
        }
    }
    return out;
}

}  // namespace detail

namespace {

bool path_satisfies_sps(const Graph&, const Metric& m, const Bitset& u_ab,
                        const Bitset& iu, const std::vector<int>& path, int u) {
    int v = path.front(), w = path.back();
    int len = static_cast<int>(path.size()) - 1;
    // (SPS2): for all x,y in U_ab with u on an (x,y)-geodesic, the path
    // extends to an (x,y)-geodesic.
    auto members = u_ab.to_vector();
    for (int x : members) {
        for (int y : members) {
            if (x >= y || !m.on_geodesic(x, u, y)) continue;
            bool extends = (m.d(x, v) + len + m.d(w, y) == m.d(x, y)) ||
                           (m.d(x, w) + len + m.d(v, y) == m.d(x, y));
            if (!extends) return false;
        }
    }
    // (SPS1): every x in I(U_ab) has u on a geodesic to an endvertex.
    for (int x = iu.first(); x >= 0; x = iu.first(x + 1)) {
        if (!m.on_geodesic(x, u, v) && !m.on_geodesic(x, u, w)) return false;
    }
    return true;
}

}  // namespace

std::vector<int> associated_geodesic(const Graph& g, const Metric& m, Arc arc, int u) {
    Bitset uab = u_set(g, m, arc.first, arc.second);
    Bitset iu = prehull_step(m, uab);
    if (!iu.test(u) || uab.test(u))
        fail("OutOfRange", "vertex must lie in I(U_ab) - U_ab");
    auto members = uab.to_vector();
    // Candidate endpoint pairs by increasing distance; lexicographic within.
    std::vector<std::pair<int, std::pair<int, int>>> pairs;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            int v = members[i], w = members[j];
            if (m.on_geodesic(v, u, w)) pairs.push_back({m.d(v, w), {v, w}});
        }
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [len, vw] : pairs) {
        auto [v, w] = vw;
        for (const auto& path : detail::geodesics_between(g, m, v, w)) {
            if (std::find(path.begin(), path.end(), u) == path.end()) continue;
            // must be a U_ab-path: no inner vertex in U_ab
            bool inner_clean = true;
            for (size_t i = 1; i + 1 < path.size(); ++i) {
                if (uab.test(path[i])) {
                    inner_clean = false;
                    break;
                }
            }
            if (!inner_clean) continue;
            if (!is_convex(m, Bitset::of(g.n(), path)).convex) continue;
            if (path_satisfies_sps(g, m, uab, iu, path, u)) return path;
        }
    }
    fail("NotStronglyPhStable", "no associated geodesic through vertex " + std::to_string(u));
}

bool is_strongly_ph_stable(const Graph& g, const Metric& m, Arc arc) {
    Bitset uab = u_set(g, m, arc.first, arc.second);
    Bitset iu = prehull_step(m, uab);
    Bitset inner = iu - uab;
    for (int u = inner.first(); u >= 0; u = inner.first(u + 1)) {
        try {
            associated_geodesic(g, m, arc, u);
        } catch (const Error& e) {
            if (e.code() == "NotStronglyPhStable") return false;
            throw;
        }
    }
    return true;
}

bool is_strongly_ph_stable_set(const Graph& g, const Metric& m, const Bitset& a) {
    Bitset ia = prehull_step(m, a);
    Bitset inner = ia - a;
    auto members = a.to_vector();
    for (int u = inner.first(); u >= 0; u = inner.first(u + 1)) {
        bool found = false;
        std::vector<std::pair<int, std::pair<int, int>>> pairs;
        for (size_t i = 0; i < members.size() && !found; ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                int v = members[i], w = members[j];
                if (m.on_geodesic(v, u, w)) pairs.push_back({m.d(v, w), {v, w}});
            }
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [len, vw] : pairs) {
            if (found) break;
            auto [v, w] = vw;
            for (const auto& path : detail::geodesics_between(g, m, v, w)) {
                if (std::find(path.begin(), path.end(), u) == path.end()) continue;
                bool inner_clean = true;
                for (size_t i = 1; i + 1 < path.size(); ++i) {
                    if (a.test(path[i])) {
                        inner_clean = false;
                        break;
                    }
                }
                if (!inner_clean) continue;
                if (!is_convex(m, Bitset::of(g.n(), path)).convex) continue;
                if (path_satisfies_sps(g, m, a, ia, path, u)) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

std::optional<int> gate_of(const Metric& m, const Bitset& f, int x) {
    auto members = f.to_vector();
    if (members.empty()) return std::nullopt;
    for (int y : members) {
        bool gate = true;
        for (int z : members) {
            if (!m.on_geodesic(x, y, z)) {
                gate = false;
                break;
            }
        }
        if (gate) return y;
    }
    return std::nullopt;
}

bool is_gated(const Metric& m, const Bitset& f) {
    for (int x = 0; x < m.n(); ++x) {
        if (!gate_of(m, f, x)) return false;
    }
    return true;
}

std::vector<std::vector<int>> convex_cycles(const Graph& g, const Metric& m) {
    // Every convex cycle is the interval of any of its antipodal pairs, so
    // scanning pair intervals finds them all.
    std::vector<std::vector<int>> out;
    std::vector<Bitset> seen;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            int d = m.d(u, v);
            if (d < 2 || d == kUnreachable) continue;
            const Bitset& cand = m.between(u, v);
            if (cand.count() != 2 * d) continue;
            if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
            auto verts = cand.to_vector();
            bool cyclic = true;
            for (int z : verts) {
                int deg = 0;
                for (int w : g.neighbors(z)) deg += cand.test(w);
                if (deg != 2) {
                    cyclic = false;
                    break;
                }
            }
            if (!cyclic || !is_convex(m, cand).convex) continue;
            seen.push_back(cand);
            // canonical traversal: least vertex, then its smaller neighbor
            int start = verts.front();
            int prev = start;
            int nb0 = -1, nb1 = -1;
            for (int w : g.neighbors(start)) {
                if (cand.test(w)) (nb0 == -1 ? nb0 : nb1) = w;
            }
            int cur = std::min(nb0, nb1);
            std::vector<int> cycle{start};
            while (cur != start) {
                cycle.push_back(cur);
                for (int w : g.neighbors(cur)) {
                    if (cand.test(w) && w != prev) {
                        prev = cur;
                        cur = w;
                        break;
                    }
                }
            }
            out.push_back(std::move(cycle));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_gamma_closed(const Metric&, const Bitset& f,
                     const std::vector<std::vector<int>>& cycles) {
    for (const auto& cycle : cycles) {
        int inside = 0;
        for (int v : cycle) inside += f.test(v);
        if (inside >= 3 && inside < static_cast<int>(cycle.size())) return false;
    }
    return true;
}

Bitset gated_hull(const Graph&, const Metric& m, const Bitset& a,
                  const std::vector<std::vector<int>>& cycles) {
    Bitset cur = a;
    while (true) {
        Bitset next = convex_hull(m, cur).members;
        for (const auto& cycle : cycles) {
            int inside = 0;
            for (int v : cycle) inside += next.test(v);
            if (inside >= 3) {
                for (int v : cycle) next.set(v);
            }
        }
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Bitset gated_hull(const Graph& g, const Metric& m, const Bitset& a) {
    return gated_hull(g, m, a, convex_cycles(g, m));
}

namespace {

// All convex candidate sets for the bounded S4 / JHC checks: hulls of seeds
// of size <= 3, all intervals, all half-spaces.
std::vector<Bitset> candidate_convex_sets(const Graph& g, const Metric& m) {
    std::vector<Bitset> out;
    auto push = [&](Bitset b) {
        if (!b.any()) return;
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
    };
    int n = g.n();
    for (int x = 0; x < n; ++x) {
        Bitset s(n);
        s.set(x);
        push(s);
    }
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (m.d(x, y) == kUnreachable) continue;
            Bitset s(n);
            s.set(x);
            s.set(y);
            push(convex_hull(m, s).members);
            for (int z = y + 1; z < n; ++z) {
                if (m.d(x, z) == kUnreachable) continue;
                Bitset t = s;
                t.set(z);
                push(convex_hull(m, t).members);
            }
        }
    }
    // half-spaces: both W-sides of every edge that yields a convex pair
    for (auto [a, b] : g.edges()) {
        Bitset w = w_set(g, m, a, b), wb = w_set(g, m, b, a);
        if (is_convex(m, w).convex && is_convex(m, wb).convex) {
            push(w);
            push(wb);
        }
    }
    return out;
}

}  // namespace

AxiomReport axiom_checks(const Graph& g) {
    if (!g.is_connected()) fail("Disconnected", "axiom checks need a connected graph");
    Metric m(g);
    int n = g.n();
    AxiomReport rep;

    // interval monotone: every interval convex
    for (int x = 0; x < n && rep.interval_monotone; ++x) {
        for (int y = x; y < n; ++y) {
            if (!is_convex(m, m.between(x, y)).convex) {
                rep.interval_monotone = false;
                rep.monotone_witness = {x, y};
                break;
            }
        }
    }

    // Peano: u,v,w; x in I(u,w); y in I(v,x) => exists z in I(v,w), y in I(u,z)
    // helper masks S[u][y] = { z : y in I(u,z) }
    std::vector<Bitset> S(static_cast<size_t>(n) * n, Bitset(n));
    for (int u = 0; u < n; ++u) {
        for (int z = 0; z < n; ++z) {
            const Bitset& b = m.between(u, z);
            for (int y = b.first(); y >= 0; y = b.first(y + 1))
                S[static_cast<size_t>(u) * n + y].set(z);
        }
    }
    for (int u = 0; u < n && rep.peano; ++u) {
        for (int w = 0; w < n && rep.peano; ++w) {
            const Bitset& iuw = m.between(u, w);
            for (int x = iuw.first(); x >= 0 && rep.peano; x = iuw.first(x + 1)) {
                for (int v = 0; v < n && rep.peano; ++v) {
                    const Bitset& ivx = m.between(v, x);
                    for (int y = ivx.first(); y >= 0; y = ivx.first(y + 1)) {
                        if (!m.between(v, w).intersects(S[static_cast<size_t>(u) * n + y])) {
                            rep.peano = false;
                            rep.peano_witness = {u, v, w, x, y};
                            break;
                        }
                    }
                }
            }
        }
    }

    // Pash: u,v,w; v' in I(u,w), w' in I(u,v) => I(v,v') meets I(w,w')
    for (int u = 0; u < n && rep.pash; ++u) {
        for (int v = 0; v < n && rep.pash; ++v) {
            for (int w = 0; w < n && rep.pash; ++w) {
                const Bitset& iuw = m.between(u, w);
                const Bitset& iuv = m.between(u, v);
                for (int vp = iuw.first(); vp >= 0 && rep.pash; vp = iuw.first(vp + 1)) {
                    for (int wp = iuv.first(); wp >= 0; wp = iuv.first(wp + 1)) {
                        if (!m.between(v, vp).intersects(m.between(w, wp))) {
                            rep.pash = false;
                            rep.pash_witness = {u, v, w, vp, wp};
                            break;
                        }
                    }
                }
            }
        }
    }

    auto candidates = candidate_convex_sets(g, m);

    // JHC: co({u} u C) = union over v in C of co({u,v})
    for (const auto& c : candidates) {
        if (!rep.jhc) break;
        for (int u = 0; u < n; ++u) {
            if (c.test(u)) continue;
            Bitset seed = c;
            seed.set(u);
            Bitset lhs = convex_hull(m, seed).members;
            Bitset rhs(n);
            for (int v = c.first(); v >= 0; v = c.first(v + 1)) {
                Bitset pair(n);
                pair.set(u);
                pair.set(v);
                rhs |= convex_hull(m, pair).members;
            }
            if (!(lhs == rhs)) {
                rep.jhc = false;
                rep.jhc_witness = {u};
                break;
            }
        }
    }

    // S4 over disjoint candidate pairs: separating half-space must exist.
    std::vector<Bitset> halves;
    for (auto [a, b] : g.edges()) {
        Bitset w = w_set(g, m, a, b), wb = w_set(g, m, b, a);
        if (is_convex(m, w).convex && is_convex(m, wb).convex) {
            halves.push_back(w);
            halves.push_back(wb);
        }
    }
    for (size_t i = 0; i < candidates.size() && rep.s4; ++i) {
        for (size_t j = 0; j < candidates.size(); ++j) {
            if (i == j || candidates[i].intersects(candidates[j])) continue;
            bool separated = false;
            for (const auto& h : halves) {
                if (h.contains(candidates[i]) && !h.intersects(candidates[j])) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                rep.s4 = false;
                rep.s4_witness = {candidates[i].first(), candidates[j].first()};
                break;
            }
        }
    }
    return rep;
}

}  // namespace peanocube
