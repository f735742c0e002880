#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "peanocube/convexity.hpp"
#include "peanocube/theta.hpp"
#include "peanocube/transform.hpp"

using namespace peanocube;

namespace {

std::vector<size_t> class_sizes(const ThetaClassification& tc) {
    std::vector<size_t> sizes;
    for (const auto& c : tc.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("theta classes on the small fixtures") {
    auto c6 = theta_classes(make_even_cycle(6));
    CHECK(c6.class_count() == 3);
    CHECK(class_sizes(c6) == std::vector<size_t>{2, 2, 2});

    auto q3 = theta_classes(make_hypercube(3));
    CHECK(q3.class_count() == 3);
    CHECK(class_sizes(q3) == std::vector<size_t>{4, 4, 4});

    auto prism = theta_classes(make_prism(make_even_cycle(6)));
    CHECK(prism.class_count() == 4);
    CHECK(class_sizes(prism) == std::vector<size_t>{4, 4, 4, 6});
}

TEST_CASE("theta classes match the pairwise-definition oracle") {
    for (const Graph& g : {make_even_cycle(8), make_prism(make_even_cycle(6)),
                           fixture("noMCP"), fixture("M41"), fixture("K23")}) {
        if (!g.is_connected() || !is_bipartite(g).bipartite) continue;
        auto tc = theta_classes(g);
        auto ref = oracles::theta_classes_pairwise(g);
        CHECK(tc.class_count() == static_cast<int>(ref.size()));
        // same partition: every reference class maps to one library class
        for (const auto& cls : ref) {
            for (int e : cls) CHECK(tc.edge_class[e] == tc.edge_class[cls.front()]);
        }
    }
}

TEST_CASE("w and u sets") {
    Graph c6 = make_even_cycle(6);
    Metric m(c6);
    CHECK(w_set(c6, m, 0, 1).count() == 3);
    CHECK(u_set(c6, m, 0, 1).count() == 2);

    Graph q3 = make_hypercube(3);
    Metric mq(q3);
    CHECK(w_set(q3, mq, 0, 1).count() == 4);
    CHECK(u_set(q3, mq, 0, 1).count() == 4);

    // vertical arc of the prism: U_ab is the whole hexagon layer
    auto prism = make_prism(make_even_cycle(6));
    Metric mp(prism);
    // vertices are (c, layer) with layer the low bit of the product encoding
    int a = 0, b = 1;  // same C6 coordinate, different K2 layer
    REQUIRE(prism.has_edge(a, b));
    CHECK(u_set(prism, mp, a, b).count() == 6);
    CHECK_THROWS_WITH_AS(w_set(c6, m, 0, 3), doctest::Contains("NotAnEdge"), Error);
}

TEST_CASE("partial cube recognition") {
    CHECK_FALSE(is_partial_cube(fixture("K23")).ok);  // smallest bipartite non partial cube
    CHECK(is_partial_cube(fixture("Q3minus")).ok);
    CHECK(is_partial_cube(make_even_cycle(6)).ok);

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto r = is_partial_cube(c5);
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "not-bipartite");

    Graph two(4, {{0, 1}, {2, 3}});
    CHECK(is_partial_cube(two).failure == "disconnected");

    auto k23 = is_partial_cube(fixture("K23"));
    CHECK(k23.failure == "distance-mismatch");
    CHECK(k23.witness.size() == 2);
}

TEST_CASE("coordinates certify the embedding") {
    for (const Graph& g : {make_hypercube(3), make_even_cycle(8), fixture("fig6benzenoid")}) {
        auto pc = is_partial_cube(g);
        REQUIRE(pc.ok);
        Metric m(g);
        for (int u = 0; u < g.n(); ++u) {
            for (int v = 0; v < g.n(); ++v) CHECK(pc.coordinates->hamming(u, v) == m.d(u, v));
        }
    }
}

TEST_CASE("isometric dimension") {
    CHECK(isometric_dimension(make_even_cycle(6)) == 3);
    CHECK(isometric_dimension(make_hypercube(3)) == 3);
    CHECK(isometric_dimension(make_hypercube(0)) == 0);  // K1
    CHECK_THROWS_WITH_AS(isometric_dimension(fixture("K23")),
                         doctest::Contains("NotPartialCube"), Error);
}

TEST_CASE("theta on geodesics and isometric cycles") {
    // a path is a geodesic iff no two edges are Theta-equivalent, and a cycle
    // is isometric iff exactly the antipodal edge pairs are equivalent
    Graph g = make_prism(make_even_cycle(6));
    Metric m(g);
    auto tc = theta_classes(g, m);
    for (int x = 0; x < g.n(); ++x) {
        for (int y = 0; y < g.n(); ++y) {
            if (x == y) continue;
            for (const auto& p : detail::geodesics_between(g, m, x, y, 500)) {
                std::vector<int> cls;
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    cls.push_back(tc.edge_class[g.edge_index(p[i], p[i + 1])]);
                std::sort(cls.begin(), cls.end());
                CHECK(std::adjacent_find(cls.begin(), cls.end()) == cls.end());
            }
        }
    }
    for (const auto& cycle : isometric_cycles(g, m)) {
        int len = static_cast<int>(cycle.size());
        for (int i = 0; i < len; ++i) {
            for (int j = i + 1; j < len; ++j) {
                int ei = g.edge_index(cycle[i], cycle[(i + 1) % len]);
                int ej = g.edge_index(cycle[j], cycle[(j + 1) % len]);
                bool antipodal = (j - i) == len / 2;
                CHECK((tc.edge_class[ei] == tc.edge_class[ej]) == antipodal);
            }
        }
    }
}

TEST_CASE("phi map") {
    // C6: reflection across the arc axis
    Graph c6 = make_even_cycle(6);
    auto phi = phi_map(c6, 0, 1);
    Metric m(c6);
    Bitset iab = prehull_step(m, u_set(c6, m, 0, 1));
    for (int v = iab.first(); v >= 0; v = iab.first(v + 1)) {
        CHECK(phi[v] != -1);
        CHECK(phi[phi[v]] == v);
    }

    // Q3: parallel translation across the cut
    Graph q3 = make_hypercube(3);
    auto phiq = phi_map(q3, 0, 1);
    for (int v = 0; v < 8; ++v) {
        if ((v & 1) == 0) CHECK(phiq[v] == (v | 1));
    }

    // prism vertical arc: layer swap
    auto prism = make_prism(make_even_cycle(6));
    auto phip = phi_map(prism, 0, 1);
    for (int v = 0; v < prism.n(); v += 2) CHECK(phip[v] == v + 1);
}
