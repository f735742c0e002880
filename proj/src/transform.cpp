#include "peanocube/transform.hpp"

#include <algorithm>
#include <map>

#include "peanocube/convexity.hpp"
#include "peanocube/hypermedian.hpp"

namespace peanocube {

void validate_cover(const Graph& g, const ProperCover& cover) {
    Bitset v0 = Bitset::of(g.n(), cover.v0);
    Bitset v1 = Bitset::of(g.n(), cover.v1);
    if (!(v0 & v1).any()) fail("InvalidCover", "v0 and v1 must intersect");
    if ((v0 | v1).count() != g.n()) fail("InvalidCover", "v0 and v1 must cover the vertex set");
    for (auto [x, y] : g.edges()) {
        bool x01 = v0.test(x) && !v1.test(x), x10 = v1.test(x) && !v0.test(x);
        bool y01 = v0.test(y) && !v1.test(y), y10 = v1.test(y) && !v0.test(y);
        if ((x01 && y10) || (x10 && y01))
            fail("InvalidCover", "edge between v0-v1 and v1-v0");
    }
    Metric m(g);
    for (const Bitset* side : {&v0, &v1}) {
        auto sub = induced_subgraph(g, side->to_vector());
        if (!sub.graph.is_connected()) fail("InvalidCover", "side not isometric (disconnected)");
        DistanceMatrix dsub(sub.graph);
        for (int i = 0; i < sub.graph.n(); ++i) {
            for (int j = i + 1; j < sub.graph.n(); ++j) {
                if (dsub.at(i, j) != m.d(sub.to_host[i], sub.to_host[j]))
                    fail("InvalidCover", "side not isometric");
            }
        }
    }
}

ExpansionResult expand(const Graph& g, const ProperCover& cover) {
    validate_cover(g, cover);
    ExpansionResult out;
    out.psi0.assign(g.n(), -1);
    out.psi1.assign(g.n(), -1);
    int next = 0;
    VertexSet v0 = cover.v0, v1 = cover.v1;
    std::sort(v0.begin(), v0.end());
    std::sort(v1.begin(), v1.end());
    for (int v : v0) out.psi0[v] = next++;
    for (int v : v1) out.psi1[v] = next++;
    std::vector<Edge> edges;
    for (auto [x, y] : g.edges()) {
        if (out.psi0[x] != -1 && out.psi0[y] != -1) edges.emplace_back(out.psi0[x], out.psi0[y]);
        if (out.psi1[x] != -1 && out.psi1[y] != -1) edges.emplace_back(out.psi1[x], out.psi1[y]);
    }
    for (int v : v0) {
        if (out.psi1[v] != -1) edges.emplace_back(out.psi0[v], out.psi1[v]);
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

ContractionStep contract(const Graph& g, const ThetaClassification& tc, int class_id) {
    if (class_id < 0 || class_id >= tc.class_count()) fail("BadParams", "no such theta class");
    if (!is_partial_cube(g).ok) fail("NotPartialCube", "contraction needs a partial cube");
    ContractionStep step;
    step.class_id = class_id;
    std::vector<int> rep(g.n());
    for (int v = 0; v < g.n(); ++v) rep[v] = v;
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (int e : tc.classes[class_id]) {
        auto [u, v] = g.edges()[e];
        int ru = find(u), rv = find(v);
        if (ru != rv) rep[std::max(ru, rv)] = std::min(ru, rv);
    }
    step.vertex_merge.assign(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (find(v) == v) step.vertex_merge[v] = next++;
    }
    for (int v = 0; v < g.n(); ++v) step.vertex_merge[v] = step.vertex_merge[find(v)];
    std::vector<Edge> edges;
    for (size_t e = 0; e < g.edges().size(); ++e) {
        if (tc.edge_class[e] == class_id) continue;
        auto [u, v] = g.edges()[e];
        int a = step.vertex_merge[u], b = step.vertex_merge[v];
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    step.result = Graph(next, std::move(edges));
    if (!is_partial_cube(step.result).ok)
        fail("CertificationFailed", "theta-contraction did not yield a partial cube");
    return step;
}

ContractionStep contract(const Graph& g, int class_id) {
    return contract(g, theta_classes(g), class_id);
}

AmalgamResult gated_amalgam(const Graph& g0, const Graph& g1,
                            const std::vector<int>& embed0, const std::vector<int>& embed1) {
    if (embed0.size() != embed1.size() || embed0.empty())
        fail("BadParams", "shared embeddings must be non-empty and of equal size");
    size_t k = embed0.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            if (g0.has_edge(embed0[i], embed0[j]) != g1.has_edge(embed1[i], embed1[j]))
                fail("BadParams", "shared images are not isomorphic");
        }
    }
    Metric m0(g0), m1(g1);
    if (!is_gated(m0, Bitset::of(g0.n(), embed0)))
        fail("NotGatedInFactor", "shared image not gated in the first factor");
    if (!is_gated(m1, Bitset::of(g1.n(), embed1)))
        fail("NotGatedInFactor", "shared image not gated in the second factor");

    AmalgamResult out;
    out.map0.assign(g0.n(), -1);
    out.map1.assign(g1.n(), -1);
    for (int v = 0; v < g0.n(); ++v) out.map0[v] = v;
    for (size_t i = 0; i < k; ++i) out.map1[embed1[i]] = embed0[i];
    int next = g0.n();
    for (int v = 0; v < g1.n(); ++v) {
        if (out.map1[v] == -1) out.map1[v] = next++;
    }
    std::vector<Edge> edges = g0.edges();
    for (auto [u, v] : g1.edges()) {
        int a = out.map1[u], b = out.map1[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = Graph(next, std::move(edges));
    return out;
}

bool is_peripheral_cover(const Graph& g, const ProperCover& cover) {
    Bitset shared = Bitset::of(g.n(), cover.v0) & Bitset::of(g.n(), cover.v1);
    for (const VertexSet* side : {&cover.v0, &cover.v1}) {
        auto sub = induced_subgraph(g, *side);
        Metric msub(sub.graph);
        Bitset s(sub.graph.n());
        for (int v = shared.first(); v >= 0; v = shared.first(v + 1)) s.set(sub.to_sub[v]);
        if (prehull_step(msub, s).count() == sub.graph.n()) return true;
    }
    return false;
}

bool is_ph_respectful_cover(const Graph& g, const ProperCover& cover) {
    Bitset shared = Bitset::of(g.n(), cover.v0) & Bitset::of(g.n(), cover.v1);
    // (PHR1) the shared set is strongly ph-stable in both sides
    for (const VertexSet* side : {&cover.v0, &cover.v1}) {
        auto sub = induced_subgraph(g, *side);
        Metric msub(sub.graph);
        Bitset s(sub.graph.n());
        for (int v = shared.first(); v >= 0; v = shared.first(v + 1)) s.set(sub.to_sub[v]);
        if (!is_strongly_ph_stable_set(sub.graph, msub, s)) return false;
    }
    // (PHR2) I(v0 cap v1) is gated in g
    Metric m(g);
    return is_gated(m, prehull_step(m, shared));
}

std::vector<SequenceStep> contraction_sequence(const Graph& g) {
    if (!is_hyper_median(g).value)
        fail("NotHyperMedian", "contraction sequence needs a hyper-median partial cube");
    std::vector<SequenceStep> steps;
    Graph cur = g;
    while (cur.n() > 1) {
        Metric m(cur);
        ThetaClassification tc = theta_classes(cur, m);
        // lexicographically least arc whose W-side equals I(U)
        int best_class = -1;
        Arc best_arc{-1, -1};
        for (auto [u, v] : cur.edges()) {
            for (Arc arc : {Arc{u, v}, Arc{v, u}}) {
                Bitset w = w_set(cur, m, arc.first, arc.second);
                Bitset iu = prehull_step(m, u_set(cur, m, arc.first, arc.second));
                if (w == iu) {
                    best_arc = arc;
                    break;
                }
            }
            if (best_arc.first != -1) break;
        }
        if (best_arc.first == -1)
            fail("CertificationFailed", "no semi-periphery with W = I(U) found");
        best_class = tc.edge_class[cur.edge_index(best_arc.first, best_arc.second)];

        SequenceStep step;
        step.contraction = contract(cur, tc, best_class);
        // inverse cover on the contracted graph
        Bitset w_ab = w_set(cur, m, best_arc.first, best_arc.second);
        Bitset w_ba = w_set(cur, m, best_arc.second, best_arc.first);
        VertexSet v0, v1;
        for (int v = 0; v < cur.n(); ++v) {
            if (w_ab.test(v)) v0.push_back(step.contraction.vertex_merge[v]);
            if (w_ba.test(v)) v1.push_back(step.contraction.vertex_merge[v]);
        }
        std::sort(v0.begin(), v0.end());
        v0.erase(std::unique(v0.begin(), v0.end()), v0.end());
        std::sort(v1.begin(), v1.end());
        v1.erase(std::unique(v1.begin(), v1.end()), v1.end());
        step.inverse_cover = {v0, v1};
        validate_cover(step.contraction.result, step.inverse_cover);
        if (!is_peripheral_cover(step.contraction.result, step.inverse_cover))
            fail("CertificationFailed", "inverse cover not peripheral");
        if (!is_ph_respectful_cover(step.contraction.result, step.inverse_cover))
            fail("CertificationFailed", "inverse cover not ph-respectful");
        cur = step.contraction.result;
        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace peanocube
