#include "linelab/sim.hpp"

#include <algorithm>
#include <numeric>

namespace linelab::sim {

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, int n,
                                                std::uint64_t seed) {
    if (name == "never-swap") return std::make_unique<NeverSwap>(Configuration::identity(n));
    if (name == "gread") return std::make_unique<GreadAlgorithm>(Configuration::identity(n));
    if (name == "distributed-gread")
        return std::make_unique<DistributedGreadAlgorithm>(n, seed);
    throw UsageError("unknown algorithm: " + name);
}

std::vector<Request> random_line_demand(int n, int m, std::uint64_t seed) {
    if (n < 2) throw UsageError("random_line_demand: n must be >= 2");
    Rng rng = make_rng(seed, "random-line-demand");
    std::vector<NodeId> path(n);
    std::iota(path.begin(), path.end(), 0);
    std::shuffle(path.begin(), path.end(), rng);

    std::vector<Request> out;
    out.reserve(m);
    std::uniform_int_distribution<int> edge(0, n - 2);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int i = 0; i < m; ++i) {
        int j = edge(rng);
        Request r{path[j], path[j + 1]};
        if (flip(rng)) std::swap(r.u, r.v);
        out.push_back(r);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;

    explicit UnionFind(int n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
};

} // namespace

RunResult run_trace(OnlineAlgorithm& alg, std::span<const Request> sigma) {
    RunResult out;
    UnionFind uf(alg.config().size());
    long long step = 0;
    for (Request r : sigma) {
        ++step;
        long long serve0 = alg.ledger().serving;
        long long swaps0 = alg.ledger().migration;
        alg.on_request(r);
        uf.unite(r.u, r.v);

        TraceRow row;
        row.step = step;
        row.src = r.u;
        row.dst = r.v;
        row.serve_cost = alg.ledger().serving - serve0;
        row.swaps_this_step = alg.ledger().migration - swaps0;
        row.cum_serve = alg.ledger().serving;
        row.cum_swaps = alg.ledger().migration;
        row.components = uf.components;
        out.trace.push_back(row);
    }
    out.total_serving = alg.ledger().serving;
    out.total_swaps = alg.ledger().migration;
    out.total_messages = alg.ledger().message;
    out.components = uf.components;
    return out;
}

} // namespace linelab::sim
