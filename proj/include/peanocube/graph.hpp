#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peanocube/bitset.hpp"
#include "peanocube/errors.hpp"

namespace peanocube {

using VertexSet = std::vector<int>;       // always sorted ascending
using Edge = std::pair<int, int>;         // canonical: first < second
using Arc = std::pair<int, int>;          // oriented edge (a,b), ab in E(G)

// Immutable finite simple graph on vertices 0..n-1.  No loops, no parallel
// edges; the edge list is kept sorted and adjacency lists are derived.
class Graph {
public:
    Graph() : n_(0) {}
    Graph(int n, std::vector<Edge> edges, std::string name = "");

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    // Index into edges() of canonical edge {u,v}, or -1.
    int edge_index(int u, int v) const;

    bool is_connected() const;
    bool is_regular() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

constexpr int kUnreachable = -1;

// BFS-exact shortest path matrix; disconnected pairs get kUnreachable.
class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    explicit DistanceMatrix(const Graph& g);

    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

private:
    int n_;
    std::vector<int> d_;
};

// Distance matrix plus the all-pairs interval masks
// between(u,v) = { z : d(u,z) + d(z,v) = d(u,v) }.
class Metric {
public:
    explicit Metric(const Graph& g);

    const Graph& graph() const { return *g_; }
    int n() const { return dist_.n(); }
    int d(int u, int v) const { return dist_.at(u, v); }
    const DistanceMatrix& distances() const { return dist_; }

    const Bitset& between(int u, int v) const {
        return between_[static_cast<size_t>(u) * n() + v];
    }
    bool on_geodesic(int u, int z, int v) const {
        return between(u, v).test(z);
    }

private:
    const Graph* g_;
    DistanceMatrix dist_;
    std::vector<Bitset> between_;
};

DistanceMatrix distances(const Graph& g);

// {z : d(x,z)+d(z,y) = d(x,y)}; errors with DisconnectedPair.
VertexSet interval(const Metric& m, int x, int y);

struct BipartiteResult {
    bool bipartite;
    std::vector<int> color;        // valid two-coloring when bipartite
    std::vector<int> odd_cycle;    // odd closed walk witness otherwise
};
BipartiteResult is_bipartite(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;    // size g.n(), -1 outside
    std::vector<int> to_host;   // size graph.n()
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Backtracking isomorphism with degree / distance-profile pruning.
// Errors with TooLarge beyond max_n (the desk-scale cap).
std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h, int max_n = 64);
bool are_isomorphic(const Graph& g, const Graph& h, int max_n = 64);

struct ProductResult {
    Graph graph;
    // projections[i][v] = coordinate of product vertex v in factor i
    std::vector<std::vector<int>> projections;
};
ProductResult cartesian_product(const std::vector<Graph>& factors);

// Components as sorted vertex lists, sorted by smallest member.
std::vector<VertexSet> components(const Graph& g);

Bitset component_of(const Graph& g, int v, const Bitset& allowed);

}  // namespace peanocube
