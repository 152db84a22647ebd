#pragma once

#include <vector>

#include "linelab/core.hpp"

namespace linelab::oracle {

struct OracleInstance {
    int n;
    std::vector<Request> sigma;
    Configuration initial;
};

struct OfflineResult {
    long long cost = 0;
    std::vector<Configuration> witness; // h_1..h_m; empty sequence keeps the initial
};

// Exact minimum of sum_i [swaps(h_{i-1} -> h_i) + serve(sigma_i in h_i)] by
// dynamic programming over all n! configurations per step. Guarded at
// n <= 5, |sigma| <= 6.
OfflineResult optimal_offline(const OracleInstance& inst);

// Replays the witness through a fresh ledger and returns the total; must
// reproduce OfflineResult::cost exactly.
long long replay_witness(const OracleInstance& inst, const OfflineResult& result);

struct BaselineResult {
    long long upfront = 0; // swaps into the final embedding
    long long total = 0;
    Configuration final_config = Configuration(1);
    std::vector<long long> serve_costs;
};

// Embeds R(sigma) once - components laid out contiguously, ordered by
// smallest node id, each path oriented with its smaller endpoint first -
// then serves every request in that fixed embedding.
BaselineResult offline_line_baseline(int n, const std::vector<Request>& sigma,
                                     const Configuration& initial);

} // namespace linelab::oracle
