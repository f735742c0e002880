#include <doctest.h>

#include "oracles.hpp"
#include "peanocube/graph.hpp"
#include "peanocube/transform.hpp"

using namespace peanocube;

TEST_CASE("distances: cycles, cubes, disconnected pairs") {
    Graph c6 = make_even_cycle(6);
    DistanceMatrix d(c6);
    CHECK(d.at(0, 3) == 3);  // antipodal pair of C6

    Graph q3 = make_hypercube(3);
    DistanceMatrix dq(q3);
    CHECK(dq.at(0, 7) == 3);  // 000 vs 111

    Graph two(4, {{0, 1}, {2, 3}});
    DistanceMatrix dt(two);
    CHECK(dt.at(0, 2) == kUnreachable);
}

TEST_CASE("distances agree with Floyd-Warshall") {
    for (const Graph& g : {make_even_cycle(8), make_hypercube(3), make_tree(9, 3),
                           fixture("noMCP")}) {
        DistanceMatrix d(g);
        auto ref = oracles::floyd_warshall(g);
        for (int u = 0; u < g.n(); ++u) {
            for (int v = 0; v < g.n(); ++v) CHECK(d.at(u, v) == ref[u][v]);
        }
    }
}

TEST_CASE("intervals") {
    Graph q3 = make_hypercube(3);
    Metric m(q3);
    CHECK(interval(m, 0, 7).size() == 8);  // full hypercube

    Graph c6 = make_even_cycle(6);
    Metric mc(c6);
    CHECK(interval(mc, 0, 3).size() == 6);
    CHECK(interval(mc, 2, 2) == VertexSet{2});

    Graph two(4, {{0, 1}, {2, 3}});
    Metric mt(two);
    CHECK_THROWS_WITH_AS(interval(mt, 0, 3), doctest::Contains("DisconnectedPair"), Error);
}

TEST_CASE("interval symmetry and endpoints") {
    Graph g = fixture("fig6benzenoid");
    Metric m(g);
    for (int x = 0; x < g.n(); ++x) {
        for (int y = x; y < g.n(); ++y) {
            CHECK(m.between(x, y) == m.between(y, x));
            CHECK(m.between(x, y).test(x));
            CHECK(m.between(x, y).test(y));
        }
    }
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(make_even_cycle(6)).bipartite);
    CHECK(is_bipartite(make_hypercube(0)).bipartite);  // K1

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto res = is_bipartite(c5);
    CHECK_FALSE(res.bipartite);
    CHECK(res.odd_cycle.size() % 2 == 1);
    // witness is a closed odd walk
    for (size_t i = 0; i < res.odd_cycle.size(); ++i) {
        CHECK(c5.has_edge(res.odd_cycle[i], res.odd_cycle[(i + 1) % res.odd_cycle.size()]));
    }
}

TEST_CASE("induced subgraphs round-trip") {
    Graph q3 = make_hypercube(3);
    auto face = induced_subgraph(q3, {0, 1, 2, 3});  // a 4-face
    CHECK(are_isomorphic(face.graph, make_even_cycle(4)));

    auto empty = induced_subgraph(q3, {});
    CHECK(empty.graph.n() == 0);

    VertexSet all;
    for (int v = 0; v < q3.n(); ++v) all.push_back(v);
    auto whole = induced_subgraph(q3, all);
    CHECK(whole.graph.m() == q3.m());
    // the relabeling is an isomorphism onto the image
    for (auto [u, v] : q3.edges()) CHECK(whole.graph.has_edge(whole.to_sub[u], whole.to_sub[v]));
}

TEST_CASE("isomorphism") {
    Graph c6 = make_even_cycle(6);
    Graph c6b(6, {{0, 2}, {2, 4}, {1, 4}, {1, 3}, {3, 5}, {0, 5}});  // relabeled C6
    CHECK(are_isomorphic(c6, c6b));
    CHECK_FALSE(are_isomorphic(c6, make_path(5)));
    CHECK(are_isomorphic(make_hypercube(3),
                         cartesian_product({make_even_cycle(4), make_hypercube(1)}).graph));
    CHECK_THROWS_WITH_AS(are_isomorphic(make_hypercube(7), make_hypercube(7)),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("cartesian products") {
    auto prism = cartesian_product({make_even_cycle(6), make_hypercube(1)});
    CHECK(prism.graph.n() == 12);
    CHECK(prism.graph.m() == 18);

    CHECK(are_isomorphic(cartesian_product({make_hypercube(1), make_hypercube(1)}).graph,
                         make_even_cycle(4)));

    // distance additivity on random pairs (Distance Property)
    auto prod = cartesian_product({make_even_cycle(6), make_path(2)});
    DistanceMatrix d(prod.graph);
    DistanceMatrix d0(make_even_cycle(6)), d1(make_path(2));
    uint64_t state = 11;
    for (int t = 0; t < 20; ++t) {
        int u = static_cast<int>(oracles::rng_next(state) % prod.graph.n());
        int v = static_cast<int>(oracles::rng_next(state) % prod.graph.n());
        CHECK(d.at(u, v) == d0.at(prod.projections[0][u], prod.projections[0][v]) +
                                d1.at(prod.projections[1][u], prod.projections[1][v]));
    }
    CHECK_THROWS_WITH_AS(cartesian_product({}), doctest::Contains("EmptyFactor"), Error);
}

TEST_CASE("product interval and projection properties") {
    auto prod = cartesian_product({make_even_cycle(6), make_hypercube(1), make_path(2)});
    Metric m(prod.graph);
    uint64_t state = 5;
    for (int t = 0; t < 10; ++t) {
        int u = static_cast<int>(oracles::rng_next(state) % prod.graph.n());
        int v = static_cast<int>(oracles::rng_next(state) % prod.graph.n());
        Bitset iv = m.between(u, v);
        // interval = product of factor intervals, checked coordinatewise
        for (int z = 0; z < prod.graph.n(); ++z) {
            bool inside = true;
            for (int f = 0; f < 3; ++f) {
                int pu = prod.projections[f][u], pv = prod.projections[f][v],
                    pz = prod.projections[f][z];
                // z's coordinate must lie between the endpoints' coordinates
                Graph factor = f == 0 ? make_even_cycle(6)
                               : f == 1 ? make_hypercube(1)
                                        : make_path(2);
                DistanceMatrix fd(factor);
                if (fd.at(pu, pz) + fd.at(pz, pv) != fd.at(pu, pv)) inside = false;
            }
            CHECK(iv.test(z) == inside);
        }
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS(Graph(2, {{0, 0}}));
    CHECK_THROWS(Graph(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph(2, {{0, 5}}));
}
