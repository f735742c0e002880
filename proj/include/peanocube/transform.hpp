#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "peanocube/graph.hpp"
#include "peanocube/theta.hpp"

namespace peanocube {

// ---- generators --------------------------------------------------------------

Graph make_hypercube(int dim);
Graph make_even_cycle(int length);               // BadParams unless even, >= 4
Graph make_hypertorus(const std::vector<int>& cycle_lengths);
Graph make_prism(const Graph& base);             // base box K2
Graph make_path(int edge_count);                 // edge_count + 1 vertices
Graph make_tree(int vertex_count, uint64_t seed);

// Named fixtures transcribed from the source figures; each is validated by
// its stated properties in the test suite.
// Names: Q3minus, M41, B1, noMCP, fig6benzenoid, fig7faithful, fig8prime,
//        fig9phprime, K23.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

// CLI-facing dispatcher; UnknownFamily / BadParams.
Graph generate(const std::string& family, const std::vector<std::string>& params);

// ---- expansion / contraction / amalgam ---------------------------------------

struct ProperCover {
    VertexSet v0, v1;
};

// Throws InvalidCover naming the violated clause.
void validate_cover(const Graph& g, const ProperCover& cover);

struct ExpansionResult {
    Graph graph;
    std::vector<int> psi0;  // old vertex -> new vertex, -1 outside v0
    std::vector<int> psi1;
};
ExpansionResult expand(const Graph& g, const ProperCover& cover);

struct ContractionStep {
    int class_id = -1;
    std::vector<int> vertex_merge;  // old vertex -> new vertex
    Graph result;
};
ContractionStep contract(const Graph& g, const ThetaClassification& tc, int class_id);
ContractionStep contract(const Graph& g, int class_id);

struct AmalgamResult {
    Graph graph;
    std::vector<int> map0;  // g0 vertex -> new vertex
    std::vector<int> map1;  // g1 vertex -> new vertex
};
// embed0/embed1: images of a common index set 0..k-1 in g0 / g1; both images
// must induce isomorphic subgraphs and be gated in their hosts.
AmalgamResult gated_amalgam(const Graph& g0, const Graph& g1,
                            const std::vector<int>& embed0, const std::vector<int>& embed1);

struct SequenceStep {
    ContractionStep contraction;
    ProperCover inverse_cover;  // cover of the contracted graph, certified
};
// Peels a finite hyper-median partial cube down to K1; every inverse
// expansion is certified peripheral and ph-respectful.
std::vector<SequenceStep> contraction_sequence(const Graph& g);

// Cover certification used by contraction_sequence and exposed for tests.
bool is_peripheral_cover(const Graph& g, const ProperCover& cover);
bool is_ph_respectful_cover(const Graph& g, const ProperCover& cover);

}  // namespace peanocube
