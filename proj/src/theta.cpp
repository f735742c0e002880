#include "peanocube/theta.hpp"

#include <algorithm>
#include <numeric>

namespace peanocube {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool theta_related(const Metric& m, Edge e, Edge f) {
    auto [x, y] = e;
    auto [u, v] = f;
    return m.d(x, u) + m.d(y, v) != m.d(x, v) + m.d(y, u);
}

}  // namespace

ThetaClassification theta_classes(const Graph& g, const Metric& m) {
    if (g.n() == 0) fail("EmptyGraph", "theta classes of the empty graph");
    if (!g.is_connected()) fail("Disconnected", "theta classes need a connected graph");
    if (!is_bipartite(g).bipartite) fail("NotBipartite", "theta classes need a bipartite graph");

    // O(m^2) pairwise relation, classes by union-find over it.
    int mm = g.m();
    UnionFind uf(mm);
    for (int i = 0; i < mm; ++i) {
        for (int j = i + 1; j < mm; ++j) {
            if (theta_related(m, g.edges()[i], g.edges()[j])) uf.unite(i, j);
        }
    }
    ThetaClassification tc;
    tc.edge_class.assign(mm, -1);
    std::vector<int> root_to_class(mm, -1);
    for (int i = 0; i < mm; ++i) {
        int r = uf.find(i);
        if (root_to_class[r] == -1) {
            root_to_class[r] = tc.class_count();
            tc.classes.emplace_back();
            // Orientation convention: the class's lexicographically least
            // edge (u,v), taken as the arc u->v, defines the W-side.
            tc.canonical_arcs.push_back(g.edges()[i]);
        }
        int c = root_to_class[r];
        tc.edge_class[i] = c;
        tc.classes[c].push_back(i);
    }
    return tc;
}

ThetaClassification theta_classes(const Graph& g) {
    Metric m(g);
    return theta_classes(g, m);
}

Bitset w_set(const Graph& g, const Metric& m, int a, int b) {
    if (!g.has_edge(a, b)) fail("NotAnEdge", std::to_string(a) + "-" + std::to_string(b));
    Bitset w(g.n());
    for (int x = 0; x < g.n(); ++x) {
        int da = m.d(a, x), db = m.d(b, x);
        if (da != kUnreachable && (db == kUnreachable || da < db)) w.set(x);
    }
    return w;
}

Bitset u_set(const Graph& g, const Metric& m, int a, int b) {
    Bitset w = w_set(g, m, a, b);
    Bitset wb = w_set(g, m, b, a);
    Bitset u(g.n());
    for (int x = w.first(); x >= 0; x = w.first(x + 1)) {
        for (int y : g.neighbors(x)) {
            if (wb.test(y)) {
                u.set(x);
                break;
            }
        }
    }
    return u;
}

PartialCubeResult is_partial_cube(const Graph& g) {
    PartialCubeResult res;
    if (g.n() == 0) {
        res.failure = "empty";
        return res;
    }
    if (!g.is_connected()) {
        res.failure = "disconnected";
        return res;
    }
    auto bip = is_bipartite(g);
    if (!bip.bipartite) {
        res.failure = "not-bipartite";
        res.witness = bip.odd_cycle;
        return res;
    }
    Metric m(g);
    res.theta = theta_classes(g, m);
    const auto& tc = *res.theta;

    CubeCoordinates cc;
    cc.bits = tc.class_count();
    cc.coords.assign(g.n(), Bitset(cc.bits));
    for (int c = 0; c < tc.class_count(); ++c) {
        auto [a, b] = tc.canonical_arcs[c];
        Bitset w = w_set(g, m, a, b);
        for (int v = w.first(); v >= 0; v = w.first(v + 1)) cc.coords[v].set(c);
    }
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (cc.hamming(u, v) != m.d(u, v)) {
                res.failure = "distance-mismatch";
                res.witness = {u, v};
                return res;
            }
        }
    }
    res.ok = true;
    res.coordinates = std::move(cc);
    return res;
}

int isometric_dimension(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) fail("NotPartialCube", "isometric dimension needs a partial cube");
    return pc.theta->class_count();
}

}  // namespace peanocube
