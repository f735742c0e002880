#pragma once

#include <string>

#include "peanocube/graph.hpp"
#include "peanocube/retracts.hpp"
#include "peanocube/theta.hpp"
#include "peanocube/transform.hpp"

namespace peanocube {

// Graph JSON: {"name": string?, "vertices": int, "edges": [[u,v],...]},
// u < v required.  Parse failures raise ParseError.
Graph graph_from_json(const std::string& text);
Graph graph_from_json_file(const std::string& path);
std::string graph_to_json(const Graph& g);
void graph_to_json_file(const Graph& g, const std::string& path);

// DOT export; edges colored by Theta class when a classification is given.
std::string graph_to_dot(const Graph& g, const ThetaClassification* tc = nullptr);

// SelfMap JSON: {"map": [img0, img1, ...]}.
SelfMap selfmap_from_json_file(const std::string& path, int expected_n);

// Cover file JSON: {"v0": [...], "v1": [...]}.
ProperCover cover_from_json_file(const std::string& path);

}  // namespace peanocube
