#include "peanocube/euler.hpp"

#include <algorithm>

namespace peanocube {

std::vector<TorusDescriptor> enumerate_convex_tori(const Graph& g, const Metric& m) {
    if (!is_partial_cube(g).ok) fail("NotPartialCube", "torus enumeration needs a partial cube");
    std::vector<TorusDescriptor> out;
    for (int v = 0; v < g.n(); ++v) {
        TorusDescriptor t;
        t.vertices = {v};
        out.push_back(std::move(t));
    }
    for (auto [u, v] : g.edges()) {
        TorusDescriptor t;
        t.vertices = {u, v};
        t.k2_factors = 1;
        out.push_back(std::move(t));
    }
    std::vector<Bitset> seen;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (m.d(u, v) < 2) continue;
            const Bitset& cand = m.between(u, v);
            if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
            seen.push_back(cand);
            // intervals are convex in a partial cube, so the hull of the pair
            // is the interval itself; u,v antipodal in it by construction
            auto sub = induced_subgraph(g, cand.to_vector());
            auto desc = is_quasi_hypertorus(sub.graph);
            if (!desc) continue;
            TorusDescriptor t = *desc;
            t.vertices.clear();
            for (int x : sub.to_host) t.vertices.push_back(x);
            std::sort(t.vertices.begin(), t.vertices.end());
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), [](const TorusDescriptor& a, const TorusDescriptor& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<TorusDescriptor> enumerate_convex_tori(const Graph& g) {
    Metric m(g);
    return enumerate_convex_tori(g, m);
}

BetaTable beta_table(const Graph& g) {
    Metric m(g);
    BetaTable bt;
    bt.tori = enumerate_convex_tori(g, m);
    for (const auto& t : bt.tori) {
        int dim = t.dimension();
        int j = dim >= 2 ? t.gamma() : 0;
        bt.beta[{dim, j}] += 1;
    }
    return bt;
}

long long euler_characteristic(const BetaTable& bt) {
    long long s = 0;
    for (const auto& [key, count] : bt.beta) s += (key.first % 2 == 0 ? count : -count);
    return s;
}

long long idim_by_formula(const BetaTable& bt) {
    long long s = 0;
    for (const auto& [key, count] : bt.beta) {
        auto [i, j] = key;
        long long term = static_cast<long long>(i + j) * count;
        s += (i % 2 == 0 ? term : -term);
    }
    return -s;
}

long long convex_excess(const BetaTable& bt) {
    long long e = 0;
    for (const auto& [key, count] : bt.beta) {
        if (key.first == 2) e += static_cast<long long>(key.second) * count;
    }
    return e;
}

long long convex_excess(const Graph& g) { return convex_excess(beta_table(g)); }

ZoneGraph zone_graph(const Graph& g, const Metric& m, const ThetaClassification& tc,
                     int class_id) {
    if (class_id < 0 || class_id >= tc.class_count()) fail("BadParams", "no such theta class");
    ZoneGraph zg;
    zg.class_id = class_id;
    zg.edge_ids = tc.classes[class_id];
    std::sort(zg.edge_ids.begin(), zg.edge_ids.end());
    auto cycles = convex_cycles(g, m);
    std::vector<Edge> zedges;
    for (const auto& cycle : cycles) {
        std::vector<int> hits;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int e = g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
            auto it = std::lower_bound(zg.edge_ids.begin(), zg.edge_ids.end(), e);
            if (it != zg.edge_ids.end() && *it == e)
                hits.push_back(static_cast<int>(it - zg.edge_ids.begin()));
        }
        for (size_t i = 0; i < hits.size(); ++i) {
            for (size_t j = i + 1; j < hits.size(); ++j) {
                zedges.emplace_back(std::min(hits[i], hits[j]), std::max(hits[i], hits[j]));
            }
        }
    }
    std::sort(zedges.begin(), zedges.end());
    zedges.erase(std::unique(zedges.begin(), zedges.end()), zedges.end());
    zg.graph = Graph(static_cast<int>(zg.edge_ids.size()), std::move(zedges));
    return zg;
}

long long ksh_defect(const Graph& g) {
    auto pc = is_partial_cube(g);
    if (!pc.ok) fail("NotPartialCube", "KSh defect needs a partial cube");
    return 2LL * g.n() - g.m() - pc.theta->class_count() - convex_excess(g);
}

bool cycle_space_basis_check(const Graph& g) {
    if (!is_peano(g).value) fail("NotPeano", "cycle space check is stated for Peano hosts");
    Metric m(g);
    auto cycles = convex_cycles(g, m);
    long long cyclomatic = g.m() - g.n() + 1;
    if (static_cast<long long>(cycles.size()) != cyclomatic) return false;
    // Gaussian elimination over GF(2) on edge incidence vectors.
    std::vector<Bitset> rows;
    for (const auto& cycle : cycles) {
        Bitset row(g.m());
        for (size_t i = 0; i < cycle.size(); ++i) {
            row.set(g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]));
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < g.m() && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r].test(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == -1) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank == static_cast<int>(cycles.size());
}

}  // namespace peanocube
