#include "peanocube/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "peanocube/convexity.hpp"
#include "peanocube/retracts.hpp"
#include "peanocube/transform.hpp"

namespace peanocube {

int env_oracle_cap() {
    if (const char* s = std::getenv("PEANOCUBE_MAX_N")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 14;
}

std::string torus_label(const TorusDescriptor& t) {
    if (t.cycle_factors.empty()) {
        if (t.k2_factors == 0) return "K1";
        return "Q" + std::to_string(t.k2_factors);
    }
    std::string out;
    for (int len : t.cycle_factors) {
        if (!out.empty()) out += "x";
        out += "C" + std::to_string(len);
    }
    if (t.k2_factors == 1) out += "xK2";
    if (t.k2_factors > 1) out += "xK2^" + std::to_string(t.k2_factors);
    return out;
}

ClassificationFlags classify(const Graph& g) {
    ClassificationFlags f;
    auto pc = is_partial_cube(g);
    f.partial_cube = pc.ok;
    if (!pc.ok) {
        f.witness = pc.failure;
        return f;
    }
    auto peano = is_peano(g);
    f.peano = peano.value;
    if (!peano.value) f.witness = peano.witness;
    f.median = is_median(g);
    f.netlike = is_netlike(g);
    f.cube_free_netlike = is_cube_free_netlike(g);
    f.cellular = is_cellular(g);
    f.hyper_median = f.peano && is_hyper_median(g).value;
    f.quasi_hypertorus = is_quasi_hypertorus(g).has_value();
    f.antipodal = is_antipodal(g).antipodal;
    if (f.peano) f.bulge_regular = is_bulge_regular(g);
    return f;
}

AnalysisReport analyze(const Graph& g) {
    AnalysisReport r;
    r.name = g.name();
    r.n = g.n();
    r.m = g.m();
    if (g.n() == 0) fail("EmptyGraph", "cannot analyze the empty graph");
    r.flags = classify(g);
    r.hyper_median = r.flags.hyper_median;
    if (r.flags.partial_cube) {
        r.idim = isometric_dimension(g);
        r.ph = prehull_number(g);
        r.depth_value = depth(g).depth;
        auto bt = beta_table(g);
        r.euler_sum = euler_characteristic(bt);
        r.idim_formula = idim_by_formula(bt);
        if (r.flags.peano && r.euler_sum != 1)
            r.warnings.push_back("euler sum != 1 on a Peano host");
        if (r.flags.peano && r.idim_formula != r.idim)
            r.warnings.push_back("idim formula disagrees with theta count");
    }
    if (g.n() >= 2 && r.flags.peano) r.helly = helly_number(g);
    if (r.hyper_median) {
        auto tree = decompose(g);
        for (const auto* t : tree.leaves()) r.leaf_multiset.push_back(torus_label(*t));
        std::sort(r.leaf_multiset.begin(), r.leaf_multiset.end());
    }
    return r;
}

std::string report_to_json(const AnalysisReport& r, bool pretty) {
    nlohmann::ordered_json j;
    if (!r.name.empty()) j["name"] = r.name;
    j["n"] = r.n;
    j["m"] = r.m;
    j["partialCube"] = r.flags.partial_cube;
    j["peano"] = r.flags.peano;
    j["median"] = r.flags.median;
    j["netlike"] = r.flags.netlike;
    j["cubeFreeNetlike"] = r.flags.cube_free_netlike;
    j["cellular"] = r.flags.cellular;
    j["hyperMedian"] = r.hyper_median;
    j["quasiHypertorus"] = r.flags.quasi_hypertorus;
    j["antipodal"] = r.flags.antipodal;
    j["bulgeRegular"] = r.flags.bulge_regular;
    if (!r.flags.witness.empty()) j["witness"] = r.flags.witness;
    if (r.ph >= 0) j["ph"] = r.ph;
    if (r.idim >= 0) j["idim"] = r.idim;
    if (r.helly >= 0) j["helly"] = r.helly;
    if (r.depth_value >= 0) j["depth"] = r.depth_value;
    if (r.flags.partial_cube) {
        j["eulerSum"] = r.euler_sum;
        j["idimFormula"] = r.idim_formula;
    }
    if (!r.leaf_multiset.empty()) j["decompositionLeafMultiset"] = r.leaf_multiset;
    j["warnings"] = r.warnings;
    return pretty ? j.dump(2) : j.dump();
}

// ---- invariant suite ---------------------------------------------------------

namespace {

using Check = InvariantResult;

void add(std::vector<Check>& out, const std::string& label, bool pass,
         const std::string& detail = "") {
    out.push_back({label, true, pass, detail});
}

void skip(std::vector<Check>& out, const std::string& label, const std::string& why) {
    out.push_back({label, false, true, why});
}

}  // namespace

std::vector<InvariantResult> run_invariants(const Graph& g, int oracle_cap) {
    std::vector<Check> out;
    if (g.n() == 0) fail("EmptyGraph", "cannot run invariants on the empty graph");
    Metric m(g);

    // interval symmetry and endpoint membership
    {
        bool ok = true;
        for (int x = 0; x < g.n() && ok; ++x) {
            for (int y = 0; y < g.n(); ++y) {
                if (m.d(x, y) == kUnreachable) continue;
                if (!(m.between(x, y) == m.between(y, x)) || !m.between(x, y).test(x) ||
                    !m.between(x, y).test(y)) {
                    ok = false;
                    break;
                }
            }
        }
        add(out, "interval-symmetry", ok);
    }

    // hull idempotence and monotonicity over all pairs and sampled triples
    {
        bool ok = true;
        for (int x = 0; x < g.n() && ok; ++x) {
            for (int y = x; y < g.n() && ok; ++y) {
                if (m.d(x, y) == kUnreachable) continue;
                Bitset s(g.n());
                s.set(x);
                s.set(y);
                Bitset h = convex_hull(m, s).members;
                ok = convex_hull(m, h).iterations == 0 && h.contains(s);
            }
        }
        add(out, "hull-idempotent-monotone", ok);
    }

    auto pc = is_partial_cube(g);
    if (!pc.ok) {
        skip(out, "partial-cube-suite", "host is not a partial cube (" + pc.failure + ")");
        return out;
    }
    const ThetaClassification& tc = *pc.theta;

    // half-spaces convex (Djokovic-Winkler), intervals convex
    {
        bool ok = true;
        for (const auto& h : half_spaces(g, m, tc)) ok &= is_convex(m, h.members).convex;
        add(out, "half-spaces-convex", ok);
    }
    {
        bool ok = true;
        for (int x = 0; x < g.n() && ok; ++x) {
            for (int y = x; y < g.n(); ++y) {
                if (!is_convex(m, m.between(x, y)).convex) {
                    ok = false;
                    break;
                }
            }
        }
        add(out, "intervals-convex", ok);
    }

    // geodesics use pairwise distinct theta classes; cycles pair antipodal edges
    {
        bool ok = true;
        for (int x = 0; x < g.n() && ok; ++x) {
            for (int y = 0; y < g.n() && ok; ++y) {
                if (x == y || m.d(x, y) == kUnreachable) continue;
                auto geos = detail::geodesics_between(g, m, x, y, 2000);
                for (const auto& p : geos) {
                    std::vector<int> cls;
                    for (size_t i = 0; i + 1 < p.size(); ++i)
                        cls.push_back(tc.edge_class[g.edge_index(p[i], p[i + 1])]);
                    std::sort(cls.begin(), cls.end());
                    if (std::adjacent_find(cls.begin(), cls.end()) != cls.end()) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        add(out, "geodesics-distinct-classes", ok);
    }

    // ph <= 1 iff every arc ph-stable on both sides
    {
        int ph = prehull_number(g);
        bool all_stable = true;
        for (const auto& [a, b] : tc.canonical_arcs) {
            all_stable &= is_ph_stable(g, m, {a, b}).stable;
            all_stable &= is_ph_stable(g, m, {b, a}).stable;
        }
        add(out, "ph-le-1-iff-arcs-stable", (ph <= 1) == all_stable,
            "ph=" + std::to_string(ph));
    }

    // semi-periphery with ph-stable U has W = I(U)
    {
        bool ok = true;
        for (const auto& arc : semi_peripheries(g, m, tc)) {
            if (is_ph_stable(g, m, arc).stable) {
                Bitset w = w_set(g, m, arc.first, arc.second);
                Bitset iu = prehull_step(m, u_set(g, m, arc.first, arc.second));
                ok &= (w == iu);
            }
        }
        add(out, "semi-periphery-interval", ok);
    }

    auto peano = is_peano(g);

    // axiom equivalences: peano axiom <=> jhc <=> (interval monotone and
    // structurally Peano)
    {
        auto rep = axiom_checks(g);
        bool agree = (rep.peano == rep.jhc) &&
                     (rep.peano == (rep.interval_monotone && peano.value));
        add(out, "axiom-equivalences", agree);
        add(out, "peano-implies-pash", !rep.peano || rep.pash);
    }

    // characterization agreement: sampled convex subgraphs have ph <= 1 iff
    // every arc strongly ph-stable iff bulge structure certifies
    {
        bool cond_i = true;
        for (int x = 0; x < g.n() && cond_i; ++x) {
            for (int y = x; y < g.n() && cond_i; ++y) {
                Bitset s(g.n());
                s.set(x);
                s.set(y);
                for (int z = y; z < g.n() && cond_i; ++z) {
                    Bitset t = s;
                    t.set(z);
                    auto sub = induced_subgraph(g, convex_hull(m, t).members.to_vector());
                    if (sub.graph.n() >= 2 && prehull_number(sub.graph) > 1) cond_i = false;
                }
            }
        }
        bool cond_ii = peano.value;
        bool cond_iii = true;
        for (const auto& [a, b] : tc.canonical_arcs) {
            for (Arc arc : {Arc{a, b}, Arc{b, a}}) {
                try {
                    for (const auto& bulge : bulges(g, m, arc)) cylinder_of(g, m, bulge);
                } catch (const Error&) {
                    cond_iii = false;
                }
            }
        }
        add(out, "characterization-agreement",
            cond_i == cond_ii && cond_ii == cond_iii,
            std::string("(i)=") + (cond_i ? "1" : "0") + " (ii)=" + (cond_ii ? "1" : "0") +
                " (iii)=" + (cond_iii ? "1" : "0"));
    }

    // class hierarchy containments
    {
        bool med = is_median(g), net = is_netlike(g), cf = is_cube_free_netlike(g),
             cel = is_cellular(g), anti = is_antipodal(g).antipodal;
        bool torus = is_quasi_hypertorus(g).has_value();
        bool ok = (!med || net) && (!net || peano.value) && (!cel || cf) && (!cf || net) &&
                  (!torus || (peano.value && anti)) && ((anti && peano.value) == torus);
        add(out, "class-hierarchy", ok);
    }

    if (!peano.value) {
        skip(out, "peano-suite", "host is not Peano: " + peano.witness);
        return out;
    }

    // isometric cycle hulls are gated quasi-hypertori
    {
        bool ok = true;
        for (const auto& cycle : isometric_cycles(g, m)) {
            Bitset h = convex_hull(m, Bitset::of(g.n(), cycle)).members;
            auto sub = induced_subgraph(g, h.to_vector());
            if (!is_quasi_hypertorus(sub.graph) || !is_gated(m, h)) {
                ok = false;
                break;
            }
        }
        add(out, "isometric-cycle-hulls", ok);
    }

    // convex tori are gated and antipodal
    auto tori = enumerate_convex_tori(g, m);
    {
        bool ok = true;
        for (const auto& t : tori) {
            Bitset b = Bitset::of(g.n(), t.vertices);
            if (!is_gated(m, b)) ok = false;
            auto sub = induced_subgraph(g, t.vertices);
            if (!is_antipodal(sub.graph).antipodal) ok = false;
        }
        add(out, "convex-tori-gated-antipodal", ok);
    }

    // Euler identity and idim formula
    {
        auto bt = beta_table(g);
        add(out, "euler-characteristic", euler_characteristic(bt) == 1);
        add(out, "idim-formula", idim_by_formula(bt) == tc.class_count());
        // KSh chain: cube-free netlike <=> beta identities <=> defect 2 <=>
        // zone graphs trees
        bool cf = is_cube_free_netlike(g);
        long long e = convex_excess(bt);
        bool beta_ids = (bt.beta_i(0) - bt.beta_i(1) + bt.beta_i(2) == 1) &&
                        (tc.class_count() == bt.beta_i(1) - 2 * bt.beta_i(2) - e);
        bool defect2 = ksh_defect(g) == 2;
        bool zone_trees = true, zone_connected = true;
        for (int c = 0; c < tc.class_count(); ++c) {
            auto zg = zone_graph(g, m, tc, c);
            zone_connected &= zg.graph.is_connected();
            if (zg.graph.m() != zg.graph.n() - 1) zone_trees = false;
        }
        add(out, "zone-graphs-connected", zone_connected);
        add(out, "ksh-equivalences", cf == beta_ids && beta_ids == defect2 &&
                                         defect2 == zone_trees);
        add(out, "cycle-space-basis", cycle_space_basis_check(g) == cf);
    }

    // quasi-median uniqueness and hyper-median gate/idim properties
    {
        bool unique_ok = true, gates_ok = true;
        int limit = std::min(g.n(), 12);
        auto is_quasi_median = [&](int u, int v, int w, int x, int y, int z) {
            if (m.d(u, v) != m.d(u, x) + m.d(x, y) + m.d(y, v)) return false;
            if (m.d(v, w) != m.d(v, y) + m.d(y, z) + m.d(z, w)) return false;
            if (m.d(w, u) != m.d(w, z) + m.d(z, x) + m.d(x, u)) return false;
            Bitset a = m.between(x, y) & m.between(y, z);
            Bitset b = m.between(y, z) & m.between(z, x);
            Bitset c = m.between(z, x) & m.between(x, y);
            return a.count() == 1 && a.test(y) && b.count() == 1 && b.test(z) &&
                   c.count() == 1 && c.test(x);
        };
        for (int u = 0; u < limit && unique_ok; ++u) {
            for (int v = u; v < limit && unique_ok; ++v) {
                for (int w = v; w < limit && unique_ok; ++w) {
                    int found = 0;
                    for (int x = 0; x < g.n() && found < 2; ++x) {
                        for (int y = 0; y < g.n() && found < 2; ++y) {
                            for (int z = 0; z < g.n() && found < 2; ++z) {
                                if (x == y && y == z) continue;
                                if (is_quasi_median(u, v, w, x, y, z)) ++found;
                            }
                        }
                    }
                    if (found > 1) unique_ok = false;
                    auto res = median_or_hyper_median(g, m, u, v, w);
                    if (res.kind != MedianResult::Kind::HyperMedian) continue;
                    auto [x, y, z] = res.triangle;
                    Bitset hull = Bitset::of(g.n(), res.hull->vertices);
                    if (gate_of(m, hull, u) != x || gate_of(m, hull, v) != y ||
                        gate_of(m, hull, w) != z)
                        gates_ok = false;
                    auto sub = induced_subgraph(g, res.hull->vertices);
                    if (2 * isometric_dimension(sub.graph) !=
                        m.d(x, y) + m.d(y, z) + m.d(z, x))
                        gates_ok = false;
                }
            }
        }
        add(out, "hyper-median-gates-idim", gates_ok);
        add(out, "quasi-median-uniqueness", unique_ok);
    }

    // Helly agreement with the oracle at desk scale
    if (g.n() >= 2) {
        if (g.n() <= std::min(oracle_cap, 12)) {
            add(out, "helly-fast-vs-oracle", helly_number(g) == helly_number_oracle(g, 12));
        } else {
            skip(out, "helly-fast-vs-oracle", "host too large for the oracle");
        }
        int h = helly_number(g);
        add(out, "helly-le-3", h == (is_median(g) ? 2 : 3));
    }

    // dismantlability of the derived graphs
    {
        add(out, "diamond-dismantlable", is_dismantlable(diamond_graph(g)).dismantlable);
        add(out, "torus-graph-dismantlable",
            is_dismantlable(torus_intersection_graph(g).graph).dismantlable);
    }

    // retract closure: fold onto the hull of an edge and re-test
    if (g.n() >= 2) {
        VertexSet seed{g.edges()[0].first, g.edges()[0].second};
        auto r = retraction_onto_convex(g, convex_hull(g, seed).members.to_vector());
        VertexSet image;
        for (int v = 0; v < g.n(); ++v) {
            if (r.image[v] == v) image.push_back(v);
        }
        auto sub = induced_subgraph(g, image);
        bool ok = is_peano(sub.graph).value && is_strongly_faithful(g, image);
        add(out, "retract-closure", ok);
    }

    // hyper-median block: decomposition + depth witness
    if (is_hyper_median(g).value) {
        auto tree = decompose(g);
        bool sound = are_isomorphic(reassemble(g, tree), g, std::max(64, g.n()));
        for (const auto* leaf : tree.leaves()) {
            auto sub = induced_subgraph(g, leaf->vertices);
            sound &= is_quasi_hypertorus(sub.graph).has_value();
        }
        add(out, "decomposition-soundness", sound);
        auto dep = depth(g);
        if (dep.depth >= 2) {
            auto witness = depth_witness_set(g);
            auto sub = induced_subgraph(g, witness);
            add(out, "depth-witness", depth(sub.graph).depth == dep.depth - 2);
        } else {
            skip(out, "depth-witness", "depth < 2");
        }
        // contraction sequence certifies peripheral ph-respectful inverses
        auto steps = contraction_sequence(g);
        add(out, "contraction-sequence", steps.size() == static_cast<size_t>(tc.class_count()));
    } else {
        skip(out, "decomposition-soundness", "host is not hyper-median");
    }

    return out;
}

std::vector<Graph> standard_fixtures() {
    std::vector<Graph> out;
    out.push_back(make_hypercube(0));
    out.push_back(make_hypercube(1));
    out.push_back(make_hypercube(2));
    out.push_back(make_hypercube(3));
    out.push_back(make_even_cycle(6));
    out.push_back(make_even_cycle(8));
    out.push_back(make_path(2));
    out.push_back(make_tree(8, 7));
    out.push_back(make_prism(make_even_cycle(6)));
    out.push_back(make_hypertorus({6, 6}));
    {
        // fused hexagons: gated amalgam of two C6 along an edge
        auto a = gated_amalgam(make_even_cycle(6), make_even_cycle(6), {0, 1}, {0, 1});
        out.push_back(Graph(a.graph.n(), a.graph.edges(), "fusedHexagons"));
    }
    {
        // two hexagons joined by a bridge edge (depth-3 chain)
        auto bridge = gated_amalgam(make_even_cycle(6), make_path(1), {0}, {0});
        auto chain = gated_amalgam(Graph(bridge.graph.n(), bridge.graph.edges()),
                                   make_even_cycle(6), {6}, {0});
        out.push_back(Graph(chain.graph.n(), chain.graph.edges(), "hexBridgeHex"));
    }
    out.push_back(Graph(4, {{0, 1}, {1, 2}, {1, 3}}, "K13"));
    for (const auto& name : fixture_names()) out.push_back(fixture(name));
    return out;
}

std::vector<Graph> peano_fixtures() {
    std::vector<Graph> out;
    for (const auto& g : standard_fixtures()) {
        if (is_peano(g).value) out.push_back(g);
    }
    return out;
}

}  // namespace peanocube
