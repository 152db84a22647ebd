#include "linelab/experiments.hpp"

#include "linelab/sim.hpp"

namespace linelab::experiments {

RatioRow ratio_point(int n, const std::string& alg, double epsilon, std::uint64_t seed,
                     std::vector<adversary::PhaseRecord>* phases,
                     oracle::BaselineResult* baseline_out) {
    RatioRow row;
    row.n = n;
    row.alg = alg;

    bool baseline_as_player = alg == "offline-baseline";
    auto on = sim::make_algorithm(baseline_as_player ? "never-swap" : alg, n, seed);
    auto result = adversary::adversary_run(n, epsilon, *on, seed);
    if (phases) *phases = result.phases;

    auto base = oracle::offline_line_baseline(n, result.sequence, Configuration::identity(n));
    if (baseline_out) *baseline_out = base;

    row.off_cost = base.total;
    row.on_cost = baseline_as_player ? base.total
                                     : on->ledger().serving + on->ledger().migration;
    row.len = static_cast<long long>(result.sequence.size());
    row.ratio = row.off_cost == 0 ? 0.0
                                  : static_cast<double>(row.on_cost) / static_cast<double>(row.off_cost);
    return row;
}

} // namespace linelab::experiments
