#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peanocube/convexity.hpp"
#include "peanocube/graph.hpp"
#include "peanocube/theta.hpp"

namespace peanocube {

// A convex quasi-hypertorus: Cartesian product of K2's and even cycles of
// length > 4.  dimension = k2 + 2 * #cycles; gamma sums len/2 - 2.
struct TorusDescriptor {
    VertexSet vertices;
    int k2_factors = 0;
    std::vector<int> cycle_factors;  // even lengths > 4, sorted

    int dimension() const { return k2_factors + 2 * static_cast<int>(cycle_factors.size()); }
    int gamma() const {
        int s = 0;
        for (int len : cycle_factors) s += len / 2 - 2;
        return s;
    }
    bool is_hypertorus() const { return !cycle_factors.empty() && k2_factors % 2 == 0; }
};

struct Bulge {
    Arc arc;
    VertexSet component;  // component of G[co(U_ab) - U_ab]
    VertexSet closure;    // N[component] inside G[co(U_ab)]
};

struct Hypercylinder {
    VertexSet vertices;
    int cycle_length = 0;
    VertexSet cross_section;                // one component of X[U_ab]
    std::vector<std::vector<int>> layers;   // the cycle layers
};

struct ClassificationFlags {
    bool partial_cube = false, peano = false, median = false, netlike = false,
         cube_free_netlike = false, cellular = false, hyper_median = false,
         quasi_hypertorus = false, antipodal = false, bulge_regular = false;
    std::string witness;  // one-line note about the deciding side
};

struct BoolWitness {
    bool value = false;
    std::string witness;
};

std::vector<Bulge> bulges(const Graph& g, const Metric& m, Arc arc);

// The unique convex cycle through u carrying the arc's class; certified
// convex and gated.  NotStronglyPhStable when the structure is missing.
std::vector<int> ab_cycle(const Graph& g, const Metric& m, Arc arc, int u);

// Cyl[X] = (ab-cycle) box (cross-section); certifies HNB1 and HNB2,
// StructureViolation otherwise.
Hypercylinder cylinder_of(const Graph& g, const Metric& m, const Bulge& bulge);

// Arcs (one per class orientation) whose W-side equals co(U); cross-checked
// against half-space minimality.
std::vector<Arc> semi_peripheries(const Graph& g, const Metric& m, const ThetaClassification& tc);

BoolWitness is_peano(const Graph& g);
bool is_median(const Graph& g);
bool is_netlike(const Graph& g);
bool is_cube_free_netlike(const Graph& g);
bool is_cellular(const Graph& g);
std::optional<TorusDescriptor> is_quasi_hypertorus(const Graph& g);

struct AntipodalResult {
    bool antipodal = false;
    std::vector<int> antipode;  // -1 where missing
};
AntipodalResult is_antipodal(const Graph& g);

bool is_bulge_regular(const Graph& g);

// Isometric cycles (canonical vertex lists).  Enumerated from antipodal
// vertex pairs and internally disjoint geodesic pairs; cap guards blow-up.
std::vector<std::vector<int>> isometric_cycles(const Graph& g, const Metric& m,
                                               size_t cap = 2000000);

// Aggregate (including the hyper-median flag) lives in analysis.hpp.
ClassificationFlags classify(const Graph& g);

}  // namespace peanocube
