#include <algorithm>

#include "peanocube/convexity.hpp"
#include "peanocube/peano.hpp"
#include "peanocube/theta.hpp"

namespace peanocube {

std::vector<int> phi_map(const Graph& g, int a, int b) {
    if (!g.has_edge(a, b)) fail("NotAnEdge", std::to_string(a) + "-" + std::to_string(b));
    Metric m(g);
    Bitset uab = u_set(g, m, a, b), uba = u_set(g, m, b, a);
    Bitset iab = prehull_step(m, uab), iba = prehull_step(m, uba);

    std::vector<int> phi(g.n(), -1);
    Bitset wba = w_set(g, m, b, a);
    for (int x = uab.first(); x >= 0; x = uab.first(x + 1)) {
        for (int y : g.neighbors(x)) {
            if (wba.test(y)) {
                phi[x] = y;
                phi[y] = x;
                break;
            }
        }
    }
    Bitset inner = iab - uab;
    for (int u = inner.first(); u >= 0; u = inner.first(u + 1)) {
        std::vector<int> cycle;
        try {
            cycle = ab_cycle(g, m, {a, b}, u);
        } catch (const Error& e) {
            fail("NotPeano", std::string("phi map undefined: ") + e.what());
        }
        // phi translates the near path onto the far path: the image of u sits
        // on the far side at the same distance from the matched endpoint.
        auto pos = std::find(cycle.begin(), cycle.end(), u);
        int len = static_cast<int>(cycle.size());
        int i = static_cast<int>(pos - cycle.begin());
        // walk both ways from u; the far-side twin is the unique vertex z of
        // the cycle in W_ba with d(v', z) = d(v, u) for the endpoint pair
        auto path = associated_geodesic(g, m, {a, b}, u);
        int v = path.front();
        int vp = phi[v];
        int best = -1;
        for (int t = 0; t < len; ++t) {
            int z = cycle[t];
            if (!wba.test(z)) continue;
            if (m.d(vp, z) == m.d(v, u) && m.d(z, phi[path.back()]) == m.d(u, path.back())) {
                if (best != -1) fail("NotPeano", "phi image not unique");
                best = z;
            }
        }
        (void)i;
        if (best == -1) fail("NotPeano", "phi image missing on the ab-cycle");
        phi[u] = best;
        phi[best] = u;
    }
    // certification: bijection I(U_ab) <-> I(U_ba) preserving adjacency
    for (int x = iab.first(); x >= 0; x = iab.first(x + 1)) {
        if (phi[x] == -1 || !iba.test(phi[x])) fail("NotPeano", "phi not onto I(U_ba)");
    }
    for (int x = iba.first(); x >= 0; x = iba.first(x + 1)) {
        if (phi[x] == -1 || phi[phi[x]] != x) fail("NotPeano", "phi not a bijection");
    }
    auto dom = iab.to_vector();
    for (size_t s = 0; s < dom.size(); ++s) {
        for (size_t t = s + 1; t < dom.size(); ++t) {
            if (g.has_edge(dom[s], dom[t]) != g.has_edge(phi[dom[s]], phi[dom[t]]))
                fail("NotPeano", "phi does not preserve adjacency");
        }
    }
    return phi;
}

}  // namespace peanocube
