#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "linelab/core.hpp"
#include "linelab/distributed.hpp"
#include "linelab/gread.hpp"

namespace linelab::sim {

// Serves every request in place, never reconfiguring.
class NeverSwap : public OnlineAlgorithm {
public:
    explicit NeverSwap(Configuration initial) : config_(std::move(initial)) {}

    long long on_request(Request r) override { return serve(config_, r, ledger_); }
    const Configuration& config() const override { return config_; }
    const CostLedger& ledger() const override { return ledger_; }
    long long last_swaps() const override { return 0; }
    std::string_view name() const override { return "never-swap"; }

private:
    Configuration config_;
    CostLedger ledger_;
};

class GreadAlgorithm : public OnlineAlgorithm {
public:
    explicit GreadAlgorithm(Configuration initial) : state_(std::move(initial)) {}

    long long on_request(Request r) override { return state_.step(r); }
    const Configuration& config() const override { return state_.config(); }
    const CostLedger& ledger() const override { return state_.ledger(); }
    long long last_swaps() const override { return state_.last_swaps(); }
    std::string_view name() const override { return "gread"; }

    gread::GreadState& state() { return state_; }
    const gread::GreadState& state() const { return state_; }

private:
    gread::GreadState state_;
};

class DistributedGreadAlgorithm : public OnlineAlgorithm {
public:
    DistributedGreadAlgorithm(int n, std::uint64_t seed) : sim_(n, seed) {}

    long long on_request(Request r) override {
        long long swaps0 = sim_.ledger().migration;
        long long cost = sim_.request(r);
        last_swaps_ = sim_.ledger().migration - swaps0;
        return cost;
    }
    const Configuration& config() const override { return sim_.config(); }
    const CostLedger& ledger() const override { return sim_.ledger(); }
    long long last_swaps() const override { return last_swaps_; }
    std::string_view name() const override { return "distributed-gread"; }

    dist::DistributedGread& sim() { return sim_; }

private:
    dist::DistributedGread sim_;
    long long last_swaps_ = 0;
};

// Known algorithm names: gread, never-swap, distributed-gread.
std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, int n,
                                                std::uint64_t seed);

// m uniform random edges of a hidden random path over the n nodes; the
// request graph stays a union of paths by construction.
std::vector<Request> random_line_demand(int n, int m, std::uint64_t seed);

struct TraceRow {
    long long step = 0;
    NodeId src = 0;
    NodeId dst = 0;
    long long serve_cost = 0;
    long long swaps_this_step = 0;
    long long cum_serve = 0;
    long long cum_swaps = 0;
    int components = 0; // connected components of the requests seen so far
};

struct RunResult {
    std::vector<TraceRow> trace;
    long long total_serving = 0;
    long long total_swaps = 0;
    long long total_messages = 0;
    int components = 0;
};

RunResult run_trace(OnlineAlgorithm& alg, std::span<const Request> sigma);

} // namespace linelab::sim
