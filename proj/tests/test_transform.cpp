#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "peanocube/analysis.hpp"
#include "peanocube/hypermedian.hpp"
#include "peanocube/theta.hpp"
#include "peanocube/transform.hpp"

using namespace peanocube;

TEST_CASE("generators") {
    CHECK(make_hypercube(3).n() == 8);
    CHECK(make_even_cycle(8).m() == 8);
    CHECK(make_hypertorus({6, 6}).n() == 36);
    CHECK(make_path(2).n() == 3);
    CHECK(make_tree(12, 3).m() == 11);
    CHECK_THROWS_WITH_AS(make_even_cycle(5), doctest::Contains("BadParams"), Error);
    CHECK_THROWS_WITH_AS(generate("nope", {}), doctest::Contains("UnknownFamily"), Error);
    CHECK(generate("prism", {"evenCycle", "6"}).n() == 12);
    CHECK(generate("fixture", {"B1"}).n() == 24);
}

TEST_CASE("cover validation") {
    Graph k2 = make_hypercube(1);
    ProperCover whole{{0, 1}, {0, 1}};
    validate_cover(k2, whole);

    Graph p2 = make_path(2);
    CHECK_THROWS_WITH_AS(validate_cover(p2, {{0}, {1, 2}}), doctest::Contains("InvalidCover"),
                         Error);
    // isometry violation: v0 = {0,2} is disconnected in P3
    CHECK_THROWS_WITH_AS(validate_cover(p2, {{0, 2}, {0, 1, 2}}),
                         doctest::Contains("InvalidCover"), Error);
}

TEST_CASE("expansions") {
    // K2 with the full double cover expands to C4
    Graph k2 = make_hypercube(1);
    auto res = expand(k2, {{0, 1}, {0, 1}});
    CHECK(are_isomorphic(res.graph, make_even_cycle(4)));

    // C4 with the full cover expands to Q3
    auto res2 = expand(make_even_cycle(4), {{0, 1, 2, 3}, {0, 1, 2, 3}});
    CHECK(are_isomorphic(res2.graph, make_hypercube(3)));

    // P2 with overlapping halves expands to the 4-vertex path
    auto res3 = expand(make_path(2), {{0, 1}, {1, 2}});
    CHECK(are_isomorphic(res3.graph, make_path(3)));

    // expansions preserve being a partial cube
    CHECK(is_partial_cube(res2.graph).ok);
}

TEST_CASE("contractions") {
    auto c6 = make_even_cycle(6);
    auto step = contract(c6, 0);
    CHECK(are_isomorphic(step.result, make_even_cycle(4)));

    auto c4 = make_even_cycle(4);
    CHECK(are_isomorphic(contract(c4, 0).result, make_hypercube(1)));

    auto q3 = make_hypercube(3);
    CHECK(are_isomorphic(contract(q3, 0).result, make_even_cycle(4)));
}

TEST_CASE("expand then contract is the identity") {
    // valid covers come from contractions: contracting any class and
    // expanding along the projected halves reproduces the host
    uint64_t state = 99;
    for (const Graph& g : {make_even_cycle(6), make_hypercube(2), fixture("noMCP"),
                           make_prism(make_even_cycle(6))}) {
        Metric m(g);
        auto tc = theta_classes(g, m);
        int cls = static_cast<int>(oracles::rng_next(state) % tc.class_count());
        auto step = contract(g, tc, cls);
        auto [a, b] = tc.canonical_arcs[cls];
        Bitset wab = w_set(g, m, a, b), wba = w_set(g, m, b, a);
        ProperCover cover;
        for (int v = 0; v < g.n(); ++v) {
            if (wab.test(v)) cover.v0.push_back(step.vertex_merge[v]);
            if (wba.test(v)) cover.v1.push_back(step.vertex_merge[v]);
        }
        std::sort(cover.v0.begin(), cover.v0.end());
        cover.v0.erase(std::unique(cover.v0.begin(), cover.v0.end()), cover.v0.end());
        std::sort(cover.v1.begin(), cover.v1.end());
        cover.v1.erase(std::unique(cover.v1.begin(), cover.v1.end()), cover.v1.end());
        auto expanded = expand(step.result, cover);
        CHECK(are_isomorphic(expanded.graph, g));

        // and contracting the fresh rung class reproduces the contraction
        auto tc2 = theta_classes(expanded.graph);
        int shared = -1;
        for (int v : cover.v0) {
            if (expanded.psi1[v] != -1) {
                shared = v;
                break;
            }
        }
        REQUIRE(shared >= 0);
        int rung_class = tc2.edge_class[expanded.graph.edge_index(expanded.psi0[shared],
                                                                  expanded.psi1[shared])];
        auto back = contract(expanded.graph, tc2, rung_class);
        CHECK(are_isomorphic(back.result, step.result));
    }
}

TEST_CASE("expansion preserves theta equivalence of surviving edges") {
    Graph g = make_even_cycle(6);
    auto expanded = expand(g, {{0, 1, 2, 3}, {3, 4, 5, 0}});
    REQUIRE(is_partial_cube(expanded.graph).ok);
    auto tc_old = theta_classes(g);
    auto tc_new = theta_classes(expanded.graph);
    for (auto [x, y] : g.edges()) {
        for (auto [u, v] : g.edges()) {
            // pick images in the same side when available
            auto im = [&](int a) { return expanded.psi0[a] != -1 ? expanded.psi0[a] : expanded.psi1[a]; };
            int e_old_1 = g.edge_index(x, y), e_old_2 = g.edge_index(u, v);
            int ex = im(x), ey = im(y), eu = im(u), ev = im(v);
            if (!expanded.graph.has_edge(ex, ey) || !expanded.graph.has_edge(eu, ev)) continue;
            bool old_eq = tc_old.edge_class[e_old_1] == tc_old.edge_class[e_old_2];
            bool new_eq = tc_new.edge_class[expanded.graph.edge_index(ex, ey)] ==
                          tc_new.edge_class[expanded.graph.edge_index(eu, ev)];
            CHECK(old_eq == new_eq);
        }
    }
}

TEST_CASE("gated amalgams") {
    auto am = gated_amalgam(make_even_cycle(6), make_even_cycle(4), {0, 1}, {0, 1});
    CHECK(am.graph.n() == 8);
    CHECK(is_partial_cube(am.graph).ok);

    auto am2 = gated_amalgam(make_even_cycle(6), make_even_cycle(6), {0}, {0});
    CHECK(am2.graph.n() == 11);

    // gluing along a non-gated 2-path must fail
    CHECK_THROWS_WITH_AS(
        gated_amalgam(make_even_cycle(6), make_even_cycle(6), {0, 1, 2}, {0, 1, 2}),
        doctest::Contains("NotGatedInFactor"), Error);

    // both copies are gated in the amalgam
    Metric m(am.graph);
    Bitset c6_copy(am.graph.n());
    for (int v = 0; v < 6; ++v) c6_copy.set(am.map0[v]);
    CHECK(is_gated(m, c6_copy));
    Bitset c4_copy(am.graph.n());
    for (int v = 0; v < 4; ++v) c4_copy.set(am.map1[v]);
    CHECK(is_gated(m, c4_copy));
}

TEST_CASE("ph <= 1 closed under amalgams and products") {
    auto am = gated_amalgam(make_even_cycle(6), make_even_cycle(8), {0, 1}, {0, 1});
    CHECK(prehull_number(am.graph) <= 1);
    auto prod = cartesian_product({make_even_cycle(6), make_hypercube(1)}).graph;
    CHECK(prehull_number(prod) <= 1);
}

TEST_CASE("contraction sequences") {
    auto steps = contraction_sequence(make_even_cycle(6));
    CHECK(steps.size() == 3);  // C6 -> C4 -> K2 -> K1
    CHECK(steps.back().contraction.result.n() == 1);

    auto q3 = contraction_sequence(make_hypercube(3));
    CHECK(q3.size() == 3);

    CHECK(contraction_sequence(make_hypercube(0)).empty());
    CHECK_THROWS_WITH_AS(contraction_sequence(fixture("noMCP")),
                         doctest::Contains("NotHyperMedian"), Error);
}

TEST_CASE("ph-respectful expansion keeps hyper-median (metamorphic)") {
    uint64_t state = 55;
    for (int trial = 0; trial < 4; ++trial) {
        auto ra = oracles::random_hyper_median_amalgam(oracles::rng_next(state), 14, false);
        auto steps = contraction_sequence(ra.graph);
        // replay: each inverse cover expands back to a hyper-median graph
        Graph cur = ra.graph;
        for (const auto& step : steps) {
            auto re = expand(step.contraction.result, step.inverse_cover);
            CHECK(is_hyper_median(re.graph).value);
            CHECK(are_isomorphic(re.graph, cur, 64));
            cur = step.contraction.result;
        }
    }
}
