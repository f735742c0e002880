#pragma once

#include <optional>
#include <vector>

#include "peanocube/graph.hpp"
#include "peanocube/peano.hpp"

namespace peanocube {

struct SelfMap {
    std::vector<int> image;  // vertex -> vertex

    int operator()(int v) const { return image[v]; }
};

bool is_contraction(const Graph& g, const SelfMap& f);
bool is_retraction(const Graph& g, const SelfMap& f);
bool is_automorphism(const Graph& g, const SelfMap& f);

// Full automorphism group by pruned backtracking; TooLarge beyond max_n.
std::vector<SelfMap> automorphisms(const Graph& g, int max_n = 64);

// V(G)_f = vertices on cycles of the functional digraph of f; NotContraction
// when f is not a contraction.
VertexSet periodic_part(const Graph& g, const SelfMap& f);

// I({u} u F) for u adjacent to the convex set F (Peano hosts).
VertexSet minimal_convex_extension(const Graph& g, const VertexSet& f, int u);

// Mooring of g on F; needs F cycle-representative convex, or a median host
// with F convex (NotCycleRepresentative otherwise).
SelfMap mooring_onto(const Graph& g, const VertexSet& f);

bool verify_mooring(const Graph& g, const VertexSet& f, const SelfMap& mu);

// Retraction onto a non-empty convex subgraph, composed of phi-folds along a
// chain of minimal convex extensions.
SelfMap retraction_onto_convex(const Graph& g, const VertexSet& f);

// Isometric and strongly median-stable (medians and hyper-medians of triples
// of f stay in f).  Pre: Peano host.
bool is_strongly_faithful(const Graph& g, const VertexSet& f);

// Maximal gated quasi-hypertori machinery (Peano hosts).
std::vector<TorusDescriptor> maximal_gated_tori(const Graph& g);

Graph diamond_graph(const Graph& g);

struct TorusIntersectionGraph {
    Graph graph;
    std::vector<TorusDescriptor> tori;  // vertex i of graph is tori[i]
};
TorusIntersectionGraph torus_intersection_graph(const Graph& g);

struct Dismantling {
    bool dismantlable = false;
    std::vector<int> order;  // elimination order when dismantlable
};
Dismantling is_dismantlable(const Graph& g);

// A minimal gated quasi-hypertorus setwise invariant under every
// automorphism (finite Peano hosts).
TorusDescriptor fixed_torus_under_automorphisms(const Graph& g);

// Restrict to the periodic part and reuse the automorphism result there.
TorusDescriptor fixed_torus_under_contraction(const Graph& g, const SelfMap& f);

}  // namespace peanocube
