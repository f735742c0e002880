#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peanocube/graph.hpp"

namespace peanocube {

// Djokovic-Winkler machinery.  Classes are the transitive closure of the
// pairwise relation, so non-partial-cube inputs still get a valid edge
// partition; only the coordinate certificate fails for them.
struct ThetaClassification {
    std::vector<int> edge_class;             // edge index -> class id
    std::vector<std::vector<int>> classes;   // class id -> edge indices
    std::vector<Arc> canonical_arcs;         // class id -> orienting arc (a,b)

    int class_count() const { return static_cast<int>(classes.size()); }
};

// Pre: g connected bipartite (else NotBipartite / Disconnected / EmptyGraph).
ThetaClassification theta_classes(const Graph& g, const Metric& m);
ThetaClassification theta_classes(const Graph& g);

// W_ab = {x : d(a,x) < d(b,x)}; U_ab = members of W_ab with a neighbor in
// W_ba.  ab must be an edge (NotAnEdge).
Bitset w_set(const Graph& g, const Metric& m, int a, int b);
Bitset u_set(const Graph& g, const Metric& m, int a, int b);

struct CubeCoordinates {
    int bits = 0;
    std::vector<Bitset> coords;  // per vertex, one bit per Theta class

    int hamming(int u, int v) const { return (coords[u] - coords[v]).count() + (coords[v] - coords[u]).count(); }
};

struct PartialCubeResult {
    bool ok = false;
    std::optional<ThetaClassification> theta;
    std::optional<CubeCoordinates> coordinates;
    // failure: "empty" | "disconnected" | "not-bipartite" | "distance-mismatch"
    std::string failure;
    std::vector<int> witness;  // odd cycle, or the mismatched pair
};

PartialCubeResult is_partial_cube(const Graph& g);

// |Theta classes|; NotPartialCube on other inputs.
int isometric_dimension(const Graph& g);

// The unique isomorphism of G[I(U_ab)] onto G[I(U_ba)] matching each U_ab
// vertex with its U_ba neighbor, extended across ab-cycles.  Entries outside
// I(U_ab) u I(U_ba) are -1.  Pre: Peano host (else NotPeano).
std::vector<int> phi_map(const Graph& g, int a, int b);

}  // namespace peanocube
