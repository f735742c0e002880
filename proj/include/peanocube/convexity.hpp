#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "peanocube/graph.hpp"
#include "peanocube/theta.hpp"

namespace peanocube {

// ---- pre-hull operator, hulls, convexity -----------------------------------

Bitset prehull_step(const Metric& m, const Bitset& a);
VertexSet prehull_step(const Graph& g, const VertexSet& a);

struct HullResult {
    Bitset members;
    int iterations = 0;  // pre-hull applications until the fixpoint
};
HullResult convex_hull(const Metric& m, const Bitset& a);
HullResult convex_hull(const Graph& g, const VertexSet& a);

struct ConvexityCheck {
    bool convex = true;
    std::pair<int, int> witness{-1, -1};  // pair whose interval escapes
};
ConvexityCheck is_convex(const Metric& m, const Bitset& a);
ConvexityCheck is_convex(const Graph& g, const VertexSet& a);

// ---- half-spaces, pre-hull number, ph-stability -----------------------------

struct HalfSpace {
    Arc arc;
    Bitset members;
};
// 2 * idim half-spaces of a partial cube, one pair per class orientation.
std::vector<HalfSpace> half_spaces(const Graph& g, const Metric& m, const ThetaClassification& tc);

// Def. of the pre-hull number over copoints (= half-spaces here); finite
// partial cubes only (NotPartialCube otherwise).
int prehull_number(const Graph& g);

struct PhStability {
    bool stable = true;
    std::pair<int, int> witness{-1, -1};  // (u,v) violating the one-sided form
};
PhStability is_ph_stable(const Graph& g, const Metric& m, Arc arc);

// Generalized form for arbitrary vertex sets (used by ph-respectful covers).
bool is_strongly_ph_stable_set(const Graph& g, const Metric& m, const Bitset& a);

// The unique convex U_ab-geodesic through u certified against (SPS1)/(SPS2);
// NotStronglyPhStable when none exists.
std::vector<int> associated_geodesic(const Graph& g, const Metric& m, Arc arc, int u);

bool is_strongly_ph_stable(const Graph& g, const Metric& m, Arc arc);

// ---- gates, gated sets, gated hulls ----------------------------------------

std::optional<int> gate_of(const Metric& m, const Bitset& f, int x);
bool is_gated(const Metric& m, const Bitset& f);

// Convex cycles, canonical form (least vertex first, smaller neighbor next).
std::vector<std::vector<int>> convex_cycles(const Graph& g, const Metric& m);

bool is_gamma_closed(const Metric& m, const Bitset& f,
                     const std::vector<std::vector<int>>& cycles);

// Fixpoint of convex hull and Gamma-closure; exact gated hull on Peano hosts
// (Thm: gated <=> convex and Gamma-closed there).
Bitset gated_hull(const Graph& g, const Metric& m, const Bitset& a,
                  const std::vector<std::vector<int>>& cycles);
Bitset gated_hull(const Graph& g, const Metric& m, const Bitset& a);

// ---- convexity axioms -------------------------------------------------------

struct AxiomReport {
    bool peano = true, pash = true, jhc = true, s4 = true, interval_monotone = true;
    std::vector<int> peano_witness, pash_witness, jhc_witness, s4_witness, monotone_witness;
};
// Exhaustive quantifier evaluation; S4 and JHC candidate convex sets are
// bounded as documented (hulls of seeds of size <= 3, intervals, half-spaces).
AxiomReport axiom_checks(const Graph& g);

namespace detail {
// Shared helper: enumerate geodesics x..y (vertex sequences); used by the
// associated-geodesic search and by isometric-cycle enumeration.
std::vector<std::vector<int>> geodesics_between(const Graph& g, const Metric& m, int x, int y,
                                                size_t cap = 200000);
}  // namespace detail

}  // namespace peanocube
