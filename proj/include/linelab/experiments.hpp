#pragma once

#include <string>
#include <vector>

#include "linelab/adversary.hpp"
#include "linelab/oracle.hpp"

namespace linelab::experiments {

struct RatioRow {
    int n = 0;
    std::string alg;
    long long on_cost = 0;
    long long off_cost = 0;
    double ratio = 0;
    long long len = 0; // adversary sequence length
};

// Runs the adaptive adversary against the named online algorithm and prices
// the produced sequence with the offline line baseline. For
// "offline-baseline" itself the sequence is generated against a never-swap
// stand-in and both costs are the baseline's, so the ratio is 1 by
// definition.
RatioRow ratio_point(int n, const std::string& alg, double epsilon, std::uint64_t seed,
                     std::vector<adversary::PhaseRecord>* phases = nullptr,
                     oracle::BaselineResult* baseline_out = nullptr);

} // namespace linelab::experiments
