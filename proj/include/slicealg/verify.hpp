#pragma once

#include <string>
#include <vector>

#include "slicealg/algebra.hpp"

namespace slicealg::verify {

struct PropertyResult {
    std::string name;
    size_t checked = 0;
    size_t failures = 0;
    double max_err = 0.0;
    std::string note;
    bool ok() const { return failures == 0; }
};

struct Options {
    double tol = kDefaultTol;
    size_t samples = 1000;   // per property, where a count applies
    int pair_count = 100;    // random function pairs
    int fta_polys = 200;
    int fta_max_degree = 6;
};

using Suite = std::vector<PropertyResult>;

std::vector<std::string> suite_names();

/// Runs one named suite ("all" runs everything). Deterministic: fixed seeds,
/// no environment dependence.
Suite run_suite(const std::string& name, const Options& opts = {});

/// The full acceptance suite: worked examples, property suites and quadrature
/// criteria with their pinned tolerances.
Suite run_acceptance(const Options& opts = {});

}  // namespace slicealg::verify
