#pragma once

#include <string>
#include <vector>

#include "peanocube/euler.hpp"
#include "peanocube/graph.hpp"
#include "peanocube/hypermedian.hpp"
#include "peanocube/peano.hpp"

namespace peanocube {

struct AnalysisReport {
    std::string name;
    int n = 0, m = 0;
    ClassificationFlags flags;
    bool hyper_median = false;
    int ph = -1;           // partial cubes only
    int idim = -1;
    int helly = -1;        // n >= 2 only
    int depth_value = -1;
    long long euler_sum = 0;
    long long idim_formula = -1;
    std::vector<std::string> leaf_multiset;  // when hyper-median
    std::vector<std::string> warnings;
};

// Canonical display label of a quasi-hypertorus factorization: "K1", "Q3",
// "C6", "C6xC8xK2^2", ...
std::string torus_label(const TorusDescriptor& t);

AnalysisReport analyze(const Graph& g);
std::string report_to_json(const AnalysisReport& r, bool pretty);

struct InvariantResult {
    std::string label;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

// Theorem suite for one graph; caps bound the exponential cross-checks.
std::vector<InvariantResult> run_invariants(const Graph& g, int oracle_cap = 14);

// The built-in fixture population (generators plus figure fixtures).
std::vector<Graph> standard_fixtures();
// The subset of standard fixtures that are Peano partial cubes.
std::vector<Graph> peano_fixtures();

int env_oracle_cap();  // PEANOCUBE_MAX_N, default 14

}  // namespace peanocube
