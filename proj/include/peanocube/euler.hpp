#pragma once

#include <map>
#include <vector>

#include "peanocube/graph.hpp"
#include "peanocube/peano.hpp"
#include "peanocube/theta.hpp"

namespace peanocube {

// All convex quasi-hypertori of a finite partial cube.  Dimension >= 2 tori
// are found as pair intervals (every convex torus is the interval of each of
// its antipodal pairs); vertices and edges are added as dimensions 0 and 1.
std::vector<TorusDescriptor> enumerate_convex_tori(const Graph& g, const Metric& m);
std::vector<TorusDescriptor> enumerate_convex_tori(const Graph& g);

struct BetaTable {
    // beta[{dimension, circumference}] with the small-dimension conventions
    std::map<std::pair<int, int>, long long> beta;
    std::vector<TorusDescriptor> tori;

    long long beta_i(int i) const {
        long long s = 0;
        for (const auto& [key, count] : beta) {
            if (key.first == i) s += count;
        }
        return s;
    }
    int max_dimension() const {
        int d = 0;
        for (const auto& [key, count] : beta) d = std::max(d, key.first);
        return d;
    }
};

BetaTable beta_table(const Graph& g);

// sum over i of (-1)^i beta_i; equals 1 on finite Peano hosts.
long long euler_characteristic(const BetaTable& bt);

// -sum_i (-1)^i sum_j (i+j) beta_i^j; equals idim on finite Peano hosts.
long long idim_by_formula(const BetaTable& bt);

// e(G) = sum over convex cycles of (|C|-4)/2.
long long convex_excess(const BetaTable& bt);
long long convex_excess(const Graph& g);

struct ZoneGraph {
    int class_id = -1;
    Graph graph;                 // vertices are the class's edges
    std::vector<int> edge_ids;   // zone vertex -> host edge index
};
ZoneGraph zone_graph(const Graph& g, const Metric& m, const ThetaClassification& tc,
                     int class_id);

// 2 a0 - a1 - idim - e(G); <= 2 always, = 2 iff all zone graphs are trees.
long long ksh_defect(const Graph& g);

// Convex cycles independent over GF(2) and spanning: count == m - n + 1.
bool cycle_space_basis_check(const Graph& g);

}  // namespace peanocube
