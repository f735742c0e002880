#include <algorithm>
#include <cstdint>

#include "peanocube/transform.hpp"

namespace peanocube {

Graph make_hypercube(int dim) {
    if (dim < 0 || dim > 20) fail("BadParams", "hypercube dimension out of range");
    int n = 1 << dim;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < dim; ++b) {
            int u = v ^ (1 << b);
            if (u > v) edges.emplace_back(v, u);
        }
    }
    return Graph(n, std::move(edges), "Q" + std::to_string(dim));
}

Graph make_even_cycle(int length) {
    if (length < 4 || length % 2 != 0) fail("BadParams", "cycle length must be even and >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
    return Graph(length, std::move(edges), "C" + std::to_string(length));
}

Graph make_hypertorus(const std::vector<int>& cycle_lengths) {
    if (cycle_lengths.empty()) fail("BadParams", "hypertorus needs at least one cycle");
    std::vector<Graph> factors;
    std::string name;
    for (int len : cycle_lengths) {
        factors.push_back(make_even_cycle(len));
        if (!name.empty()) name += "x";
        name += "C" + std::to_string(len);
    }
    auto prod = cartesian_product(factors);
    return Graph(prod.graph.n(), prod.graph.edges(), name);
}

Graph make_prism(const Graph& base) {
    auto prod = cartesian_product({base, make_hypercube(1)});
    std::string name = base.name().empty() ? "prism" : base.name() + "xK2";
    return Graph(prod.graph.n(), prod.graph.edges(), name);
}

Graph make_path(int edge_count) {
    if (edge_count < 0) fail("BadParams", "negative path length");
    std::vector<Edge> edges;
    for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
    return Graph(edge_count + 1, std::move(edges), "P" + std::to_string(edge_count));
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Graph make_tree(int vertex_count, uint64_t seed) {
    if (vertex_count <= 0) fail("BadParams", "tree needs at least one vertex");
    std::vector<Edge> edges;
    uint64_t state = seed;
    for (int v = 1; v < vertex_count; ++v) {
        int parent = static_cast<int>(splitmix64(state) % v);
        edges.emplace_back(parent, v);
    }
    return Graph(vertex_count, std::move(edges), "tree" + std::to_string(vertex_count));
}

namespace {

Graph q3_minus() {
    auto sub = induced_subgraph(make_hypercube(3), {0, 1, 2, 3, 4, 5, 6});
    return Graph(sub.graph.n(), sub.graph.edges(), "Q3minus");
}

Graph m41() {
    VertexSet keep;
    for (int v = 1; v < 15; ++v) keep.push_back(v);
    auto sub = induced_subgraph(make_hypercube(4), keep);
    return Graph(sub.graph.n(), sub.graph.edges(), "M41");
}

Graph k23() {
    std::vector<Edge> edges;
    for (int a = 0; a < 2; ++a) {
        for (int b = 2; b < 5; ++b) edges.emplace_back(a, b);
    }
    return Graph(5, std::move(edges), "K23");
}

// Cubic antipodal partial cube on 24 vertices; labels 1..12 map to 0..11 and
// the barred labels to 12..23 (the antipode of i is i + 12 mod 24).
Graph b1() {
    std::vector<Edge> edges = {
        // outer hexagon 1..6
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
        // inner hexagon 1'..6'
        {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {12, 17},
        // six spoke paths k - . - . - k'-side
        {0, 6}, {6, 21}, {15, 21},   // 1-7-10'-4'
        {1, 7}, {7, 22}, {16, 22},   // 2-8-11'-5'
        {2, 8}, {8, 23}, {17, 23},   // 3-9-12'-6'
        {3, 9}, {9, 18}, {12, 18},   // 4-10-7'-1'
        {4, 10}, {10, 19}, {13, 19}, // 5-11-8'-2'
        {5, 11}, {11, 20}, {14, 20}, // 6-12-9'-3'
        // rungs between spokes
        {6, 7}, {8, 9}, {10, 11}, {18, 19}, {20, 21}, {22, 23},
    };
    return Graph(24, std::move(edges), "B1");
}

// Benzenoid of three hexagons around one vertex; the triple (u,v,w) =
// (0, 8, 10) has neither a median nor a hyper-median.
Graph no_mcp() {
    std::vector<Edge> edges = {
        {0, 1}, {0, 2}, {1, 3}, {2, 4}, {4, 5}, {3, 5}, {4, 7}, {8, 11},
        {9, 11}, {5, 9}, {6, 8}, {3, 6}, {7, 10}, {10, 12}, {9, 12},
    };
    return Graph(13, std::move(edges), "noMCP");
}

// Benzenoid of six hexagons with two tricycles; depth 4.
Graph fig6_benzenoid() {
    std::vector<Edge> edges = {
        {13, 15}, {12, 13}, {12, 17}, {14, 16}, {15, 16}, {8, 15}, {14, 19},
        {7, 17}, {20, 21}, {18, 20}, {11, 21}, {7, 8}, {7, 10}, {9, 10},
        {9, 11}, {6, 11}, {5, 20}, {4, 14}, {2, 18}, {3, 4}, {2, 3},
        {1, 2}, {0, 5}, {0, 1}, {6, 8}, {18, 19}, {6, 19},
    };
    return Graph(22, std::move(edges), "fig6benzenoid");
}

// Faithful subgraph of C6 box K2 with pre-hull number 2: a full hexagon layer
// plus three consecutive vertices of the other layer.
Graph fig7_faithful() {
    std::vector<Edge> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
        {0, 6}, {1, 7}, {2, 8}, {6, 7}, {7, 8},
    };
    return Graph(9, std::move(edges), "fig7faithful");
}

// Prime Peano partial cube that is not netlike: the prism over two fused
// hexagons, plus one more hexagon completing a tricycle with one layer.
Graph fig8_prime() {
    std::vector<Edge> edges = {
        // new 6-cycle C through a1=0, a2=1, a3=2
        {2, 18}, {0, 1}, {1, 2}, {0, 12},
        // outer F-layer: hexagons {17,22,20,18,4,3} and {5,6,11,12,4,3}
        // sharing the edge 3-4
        {4, 12}, {3, 5}, {4, 18}, {3, 17}, {11, 12}, {5, 6}, {6, 11},
        {18, 20}, {20, 22}, {17, 22}, {3, 4},
        // inner F-layer: hexagons {15,16,14,13,19,21} and {7,8,10,9,19,21}
        // sharing the edge 19-21, interleaved with six of the prism rungs
        {8, 10}, {5, 7}, {9, 12}, {7, 21}, {7, 8}, {9, 19}, {9, 10},
        {14, 20}, {16, 22}, {13, 14}, {15, 21}, {15, 16}, {13, 18},
        {15, 17}, {19, 21}, {14, 16}, {13, 19},
        // remaining prism rungs
        {6, 8}, {10, 11}, {4, 19}, {3, 21},
    };
    return Graph(23, std::move(edges), "fig8prime");
}

// Benzenoid strip of five hexagons none of whose Theta-contractions is
// ph-homogeneous.
Graph fig9_ph_prime() {
    std::vector<Edge> edges = {
        {0, 1}, {1, 2}, {2, 9}, {12, 13}, {0, 13}, {0, 8}, {3, 6}, {6, 10},
        {7, 12}, {11, 12}, {10, 11}, {4, 8}, {5, 8}, {5, 15}, {3, 7},
        {4, 7}, {4, 14}, {3, 16}, {5, 9}, {15, 18}, {14, 17}, {14, 18},
        {16, 17},
    };
    return Graph(19, std::move(edges), "fig9phprime");
}

}  // namespace

Graph fixture(const std::string& name) {
    if (name == "Q3minus") return q3_minus();
    if (name == "M41") return m41();
    if (name == "B1") return b1();
    if (name == "noMCP") return no_mcp();
    if (name == "fig6benzenoid") return fig6_benzenoid();
    if (name == "fig7faithful") return fig7_faithful();
    if (name == "fig8prime") return fig8_prime();
    if (name == "fig9phprime") return fig9_ph_prime();
    if (name == "K23") return k23();
    fail("UnknownFamily", "unknown fixture " + name);
}

std::vector<std::string> fixture_names() {
    return {"Q3minus", "M41", "B1", "noMCP", "fig6benzenoid",
            "fig7faithful", "fig8prime", "fig9phprime", "K23"};
}

Graph generate(const std::string& family, const std::vector<std::string>& params) {
    auto as_int = [&](size_t i) {
        if (i >= params.size()) fail("BadParams", "missing parameter");
        try {
            return std::stoi(params[i]);
        } catch (...) {
            fail("BadParams", "integer expected, got " + params[i]);
        }
    };
    if (family == "hypercube") return make_hypercube(as_int(0));
    if (family == "evenCycle") return make_even_cycle(as_int(0));
    if (family == "hypertorus") {
        if (params.empty()) fail("BadParams", "hypertorus needs cycle lengths");
        std::vector<int> lens;
        for (size_t i = 0; i < params.size(); ++i) lens.push_back(as_int(i));
        return make_hypertorus(lens);
    }
    if (family == "prism") {
        if (params.empty()) fail("BadParams", "prism needs a base family");
        return make_prism(generate(params[0], {params.begin() + 1, params.end()}));
    }
    if (family == "path") return make_path(as_int(0));
    if (family == "tree") {
        int n = as_int(0);
        uint64_t seed = params.size() > 1 ? static_cast<uint64_t>(std::stoull(params[1])) : 1;
        return make_tree(n, seed);
    }
    if (family == "fixture") {
        if (params.empty()) fail("BadParams", "fixture needs a name");
        return fixture(params[0]);
    }
    fail("UnknownFamily", "unknown family " + family);
}

}  // namespace peanocube
