#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "peanocube/analysis.hpp"
#include "peanocube/convexity.hpp"
#include "peanocube/retracts.hpp"
#include "peanocube/transform.hpp"

using namespace peanocube;

TEST_CASE("automorphisms") {
    CHECK(automorphisms(make_even_cycle(6)).size() == 12);  // dihedral
    CHECK(automorphisms(make_hypercube(0)).size() == 1);
    CHECK(automorphisms(make_hypercube(3)).size() == 48);

    // C6 plus a pendant vertex: only the reflection fixing the axis
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}});
    CHECK(automorphisms(g).size() == 2);
}

TEST_CASE("self-map predicates and periodic parts") {
    Graph c6 = make_even_cycle(6);
    SelfMap rot{{1, 2, 3, 4, 5, 0}};
    CHECK(is_contraction(c6, rot));
    CHECK(is_automorphism(c6, rot));
    CHECK_FALSE(is_retraction(c6, rot));
    CHECK(periodic_part(c6, rot).size() == 6);

    SelfMap constant{{2, 2, 2, 2, 2, 2}};
    CHECK(is_contraction(c6, constant));
    CHECK(periodic_part(c6, constant) == VertexSet{2});

    SelfMap id{{0, 1, 2, 3, 4, 5}};
    CHECK(periodic_part(c6, id).size() == 6);

    SelfMap bad{{0, 3, 0, 3, 0, 3}};  // maps the edge 01 to the far pair 03
    CHECK_FALSE(is_contraction(c6, bad));
    CHECK_THROWS_WITH_AS(periodic_part(c6, bad), doctest::Contains("NotContraction"), Error);
}

TEST_CASE("minimal convex extensions") {
    // extending the 2-path of C6 by an endpoint neighbor forces the whole
    // cycle: the interval between the new vertex and the far endpoint is
    // already everything
    Graph c6 = make_even_cycle(6);
    auto ext = minimal_convex_extension(c6, {0, 1, 2}, 3);
    CHECK(ext.size() == 6);
    auto ext1 = minimal_convex_extension(c6, {0, 1}, 2);
    CHECK(ext1 == VertexSet{0, 1, 2});
    // extending a face of Q3 by any outside vertex forces the whole cube:
    // the opposite corner is antipodal, so one interval already covers it
    Graph q3 = make_hypercube(3);
    auto extq = minimal_convex_extension(q3, {0, 1, 2, 3}, 4);
    CHECK(extq.size() == 8);
    CHECK(is_convex(q3, extq).convex);
    CHECK_THROWS_WITH_AS(minimal_convex_extension(c6, {0, 1, 2}, 4),
                         doctest::Contains("NotNeighbor"), Error);
}

TEST_CASE("moorings") {
    // C6 plus pendant onto the hexagon
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}});
    auto mu = mooring_onto(g, {0, 1, 2, 3, 4, 5});
    CHECK(mu.image[6] == 0);
    CHECK(verify_mooring(g, {0, 1, 2, 3, 4, 5}, mu));

    // median host: mooring onto any convex set, e.g. a face of Q3
    Graph q3 = make_hypercube(3);
    auto muq = mooring_onto(q3, {0, 1, 2, 3});
    CHECK(verify_mooring(q3, {0, 1, 2, 3}, muq));

    // identity on the whole graph
    auto muid = mooring_onto(q3, {0, 1, 2, 3, 4, 5, 6, 7});
    for (int v = 0; v < 8; ++v) CHECK(muid.image[v] == v);

    // constant map is not a mooring of C6 onto a vertex
    Graph c6 = make_even_cycle(6);
    SelfMap constant{{0, 0, 0, 0, 0, 0}};
    CHECK_FALSE(verify_mooring(c6, {0}, constant));
}

TEST_CASE("mooring preconditions and a cycle-representative target") {
    // a hexagon layer of the prism is NOT cycle-representative: the prism
    // contains isometric 8-cycles mixing both layers, and those have no
    // theta-copy inside one layer
    auto prism = make_prism(make_even_cycle(6));
    VertexSet layer{0, 2, 4, 6, 8, 10};
    CHECK_THROWS_WITH_AS(mooring_onto(prism, layer),
                         doctest::Contains("NotCycleRepresentative"), Error);

    // prism plus a pendant vertex, moored onto the full prism
    auto withPendant = gated_amalgam(prism, make_path(1), {0}, {0});
    Graph host(withPendant.graph.n(), withPendant.graph.edges());
    VertexSet target;
    for (int v = 0; v < prism.n(); ++v) target.push_back(v);
    auto mu = mooring_onto(host, target);
    CHECK(verify_mooring(host, target, mu));
    CHECK(mu.image[12] == 0);  // the pendant folds onto its neighbor
}

TEST_CASE("retractions onto convex subgraphs") {
    Graph c6 = make_even_cycle(6);
    auto r = retraction_onto_convex(c6, {0, 1, 2});
    CHECK(is_retraction(c6, r));
    for (int v : {0, 1, 2}) CHECK(r.image[v] == v);

    Graph q3 = make_hypercube(3);
    auto rq = retraction_onto_convex(q3, {0, 1});
    CHECK(is_retraction(q3, rq));

    auto rid = retraction_onto_convex(q3, {0, 1, 2, 3, 4, 5, 6, 7});
    for (int v = 0; v < 8; ++v) CHECK(rid.image[v] == v);

    // the retract of a Peano host is Peano and strongly faithful (closure)
    Graph host = fixture("fig6benzenoid");
    auto hull = convex_hull(host, {0, 5});
    auto rr = retraction_onto_convex(host, hull.members.to_vector());
    VertexSet image;
    for (int v = 0; v < host.n(); ++v) {
        if (rr.image[v] == v) image.push_back(v);
    }
    auto sub = induced_subgraph(host, image);
    CHECK(is_peano(sub.graph).value);
    CHECK(is_strongly_faithful(host, image));
}

TEST_CASE("strongly faithful subgraphs") {
    Graph c6 = make_even_cycle(6);
    CHECK(is_strongly_faithful(c6, {0, 1, 2, 3}));  // 3-path in a 6-cycle
    CHECK(is_strongly_faithful(c6, {0, 1}));        // convex sets are faithful

    // an isometric 6-cycle of Q3 is not strongly median-stable
    Graph q3 = make_hypercube(3);
    VertexSet hexagon{1, 3, 2, 6, 4, 5};
    std::sort(hexagon.begin(), hexagon.end());
    auto sub = induced_subgraph(q3, hexagon);
    REQUIRE(are_isomorphic(sub.graph, c6));
    CHECK_FALSE(is_strongly_faithful(q3, hexagon));
}

TEST_CASE("diamond and torus intersection graphs") {
    Graph c6 = make_even_cycle(6);
    auto dia = diamond_graph(c6);
    CHECK(dia.m() == 15);  // K6: every pair lies on the hexagon

    auto fused = gated_amalgam(make_even_cycle(6), make_even_cycle(6), {0, 1}, {0, 1});
    auto tig = torus_intersection_graph(Graph(fused.graph.n(), fused.graph.edges()));
    CHECK(tig.tori.size() == 2);
    CHECK(tig.graph.m() == 1);  // the two hexagons share an edge

    auto tq3 = torus_intersection_graph(make_hypercube(3));
    CHECK(tq3.tori.size() == 1);
    CHECK(tq3.graph.n() == 1);
}

TEST_CASE("dismantlability") {
    Graph k6(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                 {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(is_dismantlable(k6).dismantlable);
    CHECK_FALSE(is_dismantlable(make_even_cycle(4)).dismantlable);
    CHECK(is_dismantlable(make_hypercube(0)).dismantlable);
    CHECK(is_dismantlable(make_tree(9, 8)).dismantlable);
}

TEST_CASE("fixed tori") {
    // C6 is vertex-transitive: the whole hexagon is the invariant torus
    auto t = fixed_torus_under_automorphisms(make_even_cycle(6));
    CHECK(t.vertices.size() == 6);

    auto tq = fixed_torus_under_automorphisms(make_hypercube(3));
    CHECK(tq.vertices.size() == 8);

    // C6 plus pendant: the attachment vertex is fixed
    Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}});
    auto tp = fixed_torus_under_automorphisms(g);
    CHECK(tp.dimension() == 0);

    // contractions
    Graph c6 = make_even_cycle(6);
    SelfMap rot2{{2, 3, 4, 5, 0, 1}};
    auto tr = fixed_torus_under_contraction(c6, rot2);
    CHECK(tr.vertices.size() == 6);

    SelfMap constant{{4, 4, 4, 4, 4, 4}};
    auto tcst = fixed_torus_under_contraction(c6, constant);
    CHECK(tcst.vertices == VertexSet{4});

    SelfMap id{{0, 1, 2, 3, 4, 5}};
    auto tid = fixed_torus_under_contraction(c6, id);
    CHECK(tid.vertices == fixed_torus_under_automorphisms(c6).vertices);
}

TEST_CASE("random self-contractions keep a fixed torus") {
    uint64_t state = 31;
    for (const Graph& g : {make_prism(make_even_cycle(6)), fixture("noMCP")}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto f = oracles::random_self_contraction(g, oracles::rng_next(state));
            REQUIRE(is_contraction(g, f));
            auto t = fixed_torus_under_contraction(g, f);
            Bitset b = Bitset::of(g.n(), t.vertices);
            for (int v : t.vertices) CHECK(b.test(f.image[v]));
        }
    }
}

TEST_CASE("strongly faithful subgraphs are Peano") {
    Graph c6 = make_even_cycle(6);
    for (const VertexSet& f : {VertexSet{0, 1, 2, 3}, VertexSet{0, 1}, VertexSet{1}}) {
        REQUIRE(is_strongly_faithful(c6, f));
        CHECK(is_peano(induced_subgraph(c6, f).graph).value);
    }
    Graph host = fixture("fig6benzenoid");
    auto hull = convex_hull(host, {0, 5}).members.to_vector();
    REQUIRE(is_strongly_faithful(host, hull));
    CHECK(is_peano(induced_subgraph(host, hull).graph).value);
}

TEST_CASE("periphery fold is a retraction") {
    // the prism's vertical class makes each layer a periphery; folding with
    // phi retracts onto the other layer
    auto prism = make_prism(make_even_cycle(6));
    auto phi = phi_map(prism, 0, 1);
    SelfMap fold;
    fold.image.resize(prism.n());
    for (int v = 0; v < prism.n(); ++v) fold.image[v] = (v % 2 == 0) ? phi[v] : v;
    CHECK(is_retraction(prism, fold));
}

TEST_CASE("retraction images satisfy the boundary-cycle condition") {
    // for a retract F and a boundary edge ab (a in F): isometric cycles of
    // F[U_ab n F] meeting the set of F-vertices whose cut partner is also in
    // F lie entirely inside that set
    for (const Graph& g : {make_prism(make_even_cycle(6)), fixture("fig6benzenoid")}) {
        Metric m(g);
        auto hull = convex_hull(g, {g.edges()[0].first, g.edges()[0].second});
        auto r = retraction_onto_convex(g, hull.members.to_vector());
        VertexSet image;
        for (int v = 0; v < g.n(); ++v) {
            if (r.image[v] == v) image.push_back(v);
        }
        Bitset fb = Bitset::of(g.n(), image);
        for (auto [a, b] : g.edges()) {
            if (fb.test(a) == fb.test(b)) continue;
            if (!fb.test(a)) std::swap(a, b);
            Bitset uab = u_set(g, m, a, b);
            Bitset wba = w_set(g, m, b, a);
            Bitset zone = uab & fb;
            if (zone.count() < 4) continue;
            // partner-in-F subset
            Bitset inner(g.n());
            for (int x = zone.first(); x >= 0; x = zone.first(x + 1)) {
                for (int y : g.neighbors(x)) {
                    if (wba.test(y) && fb.test(y)) inner.set(x);
                }
            }
            auto sub = induced_subgraph(g, zone.to_vector());
            Metric ms(sub.graph);
            for (const auto& cycle : isometric_cycles(sub.graph, ms)) {
                int hits = 0;
                for (int v : cycle) hits += inner.test(sub.to_host[v]);
                if (hits > 0) CHECK(hits == static_cast<int>(cycle.size()));
            }
        }
    }
}
