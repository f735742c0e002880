#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "peanocube/graph.hpp"
#include "peanocube/peano.hpp"

namespace peanocube {

struct MedianResult {
    enum class Kind { None, Median, HyperMedian };
    Kind kind = Kind::None;
    int median = -1;                        // Median case
    std::array<int, 3> triangle{-1, -1, -1};  // HyperMedian case
    std::optional<TorusDescriptor> hull;    // hypertorus hull of the triangle
};

// Successive interval-intersection construction; the result is certified
// (unique common point / metric triangle with hypertorus hull) or None.
MedianResult median_or_hyper_median(const Graph& g, const Metric& m, int u, int v, int w);
MedianResult median_or_hyper_median(const Graph& g, int u, int v, int w);

struct Tricycle {
    std::array<std::vector<int>, 3> cycles;
    int shared_vertex = -1;
    std::array<Edge, 3> shared_edges;
    bool quasi = false;  // set when 4-cycles participate (at most two may)
};

std::optional<Tricycle> find_tricycle(const Graph& g,
                                      const std::vector<std::vector<int>>& convex_cycles);
std::optional<Tricycle> find_tricycle(const Graph& g);

// Quasi-tricycle search: same incidence pattern, with min_squares..max_squares
// of the three cycles allowed to be 4-cycles.
std::optional<Tricycle> find_quasi_tricycle(const Graph& g,
                                            const std::vector<std::vector<int>>& convex_cycles,
                                            int min_squares, int max_squares);

BoolWitness is_hyper_median(const Graph& g);

struct DecompositionNode {
    bool leaf = false;
    TorusDescriptor torus;    // leaf payload (host-vertex coordinates)
    int left = -1, right = -1;
    VertexSet vertices;       // host vertices covered by this subtree
    VertexSet shared;         // amalgam intersection (host coordinates)
};

struct DecompositionTree {
    std::vector<DecompositionNode> nodes;
    int root = -1;

    std::vector<const TorusDescriptor*> leaves() const {
        std::vector<const TorusDescriptor*> out;
        for (const auto& nd : nodes) {
            if (nd.leaf) out.push_back(&nd.torus);
        }
        return out;
    }
};

// Gated-amalgam decomposition into quasi-hypertorus leaves; NotHyperMedian
// when the input is outside the theorem's scope.
DecompositionTree decompose(const Graph& g);

// Rebuilds a graph from the leaf subgraphs alone (edges outside every leaf
// are dropped) -- isomorphic to the input exactly when the tree is sound.
Graph reassemble(const Graph& host, const DecompositionTree& tree);

// Fast path for Peano hosts (2 iff median), exact free-set oracle otherwise;
// TooLargeForOracle beyond the cap.
int helly_number(const Graph& g, int oracle_cap = 12);
// Exact Helly number of the geodesic convexity via the point-set
// characterization of closure systems; exponential in n.
int helly_number_oracle(const Graph& g, int cap = 12);

struct DepthResult {
    int depth = 0;
    std::vector<Arc> chain;  // arcs of a longest half-space chain, increasing
};
DepthResult depth(const Graph& g);

// Gated set of depth k-2 meeting every member of Cyl+[G]; constructed per
// the intersection-of-A_sigma recipe then greedily minimized.
VertexSet depth_witness_set(const Graph& g);

// Cyl+[G]: the hypercylinders over all bulges, plus the maximal hypercubes
// not contained in any of them.
std::vector<VertexSet> cyl_plus_family(const Graph& g);

}  // namespace peanocube
