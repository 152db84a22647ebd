#include "linelab/oracle.hpp"

#include <algorithm>
#include <map>

namespace linelab::oracle {

namespace {

struct PermTable {
    std::vector<std::vector<Position>> placements; // all n! placements
    std::vector<std::vector<int>> kendall;         // pairwise swap distances
};

// Placement vectors (node -> position) for every permutation plus the
// pairwise Kendall matrix, cached per n.
const PermTable& perm_table(int n) {
    static std::map<int, PermTable> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    PermTable t;
    std::vector<Position> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    do {
        t.placements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    int count = static_cast<int>(t.placements.size());
    t.kendall.assign(count, std::vector<int>(count, 0));
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) {
            int inv = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bool oa = t.placements[a][u] < t.placements[a][v];
                    bool ob = t.placements[b][u] < t.placements[b][v];
                    if (oa != ob) ++inv;
                }
            t.kendall[a][b] = t.kendall[b][a] = inv;
        }
    return cache.emplace(n, std::move(t)).first->second;
}

int placement_index(const PermTable& t, const Configuration& c) {
    std::vector<Position> p(c.size());
    for (NodeId v = 0; v < c.size(); ++v) p[v] = c.position_of(v);
    auto it = std::lower_bound(t.placements.begin(), t.placements.end(), p);
    return static_cast<int>(it - t.placements.begin());
}

} // namespace

OfflineResult optimal_offline(const OracleInstance& inst) {
    if (inst.n < 1 || inst.n > 5) throw UsageError("optimal_offline: n must be in [1, 5]");
    if (inst.sigma.size() > 6) throw UsageError("optimal_offline: at most 6 requests");
    if (inst.initial.size() != inst.n) throw UsageError("optimal_offline: size mismatch");

    const PermTable& t = perm_table(inst.n);
    int count = static_cast<int>(t.placements.size());
    int m = static_cast<int>(inst.sigma.size());

    const long long inf = 1LL << 60;
    std::vector<long long> dp(count, inf);
    dp[placement_index(t, inst.initial)] = 0;
    std::vector<std::vector<int>> parent(m, std::vector<int>(count, -1));

    for (int i = 0; i < m; ++i) {
        Request r = inst.sigma[i];
        if (r.u < 0 || r.u >= inst.n || r.v < 0 || r.v >= inst.n || r.u == r.v)
            throw UsageError("optimal_offline: invalid request");
        std::vector<long long> next(count, inf);
        for (int to = 0; to < count; ++to) {
            long long serve_cost = std::abs(t.placements[to][r.u] - t.placements[to][r.v]);
            for (int from = 0; from < count; ++from) {
                if (dp[from] == inf) continue;
                long long c = dp[from] + t.kendall[from][to] + serve_cost;
                if (c < next[to]) {
                    next[to] = c;
                    parent[i][to] = from;
                }
            }
        }
        dp = std::move(next);
    }

    OfflineResult out;
    int best = 0;
    for (int i = 1; i < count; ++i)
        if (dp[i] < dp[best]) best = i;
    out.cost = dp[best];

    std::vector<int> chain(m);
    for (int i = m - 1, cur = best; i >= 0; --i) {
        chain[i] = cur;
        cur = parent[i][cur];
    }
    for (int i = 0; i < m; ++i)
        out.witness.push_back(Configuration::from_placement(t.placements[chain[i]]));
    return out;
}

long long replay_witness(const OracleInstance& inst, const OfflineResult& result) {
    Configuration c = inst.initial;
    CostLedger ledger;
    for (size_t i = 0; i < inst.sigma.size(); ++i) {
        move_to(c, result.witness.at(i), ledger);
        serve(c, inst.sigma[i], ledger);
    }
    return ledger.total();
}

BaselineResult offline_line_baseline(int n, const std::vector<Request>& sigma,
                                     const Configuration& initial) {
    if (initial.size() != n) throw UsageError("offline_line_baseline: size mismatch");
    RequestGraph g(n);
    for (Request r : sigma) {
        auto res = g.add_edge(r);
        if (res.kind == AddEdgeKind::RejectedNonlinear)
            throw NonlinearDemandError("offline_line_baseline: request graph is not linear");
    }

    // Final embedding: components by smallest member id, smaller path
    // endpoint first.
    std::vector<Position> placement(n);
    Position next = 1;
    for (int h : g.component_handles()) {
        std::vector<NodeId> path = g.component_path(h);
        if (path.back() < path.front()) std::reverse(path.begin(), path.end());
        for (NodeId v : path) placement[v] = next++;
    }

    BaselineResult out{0, 0, Configuration::from_placement(placement), {}};
    CostLedger ledger;
    Configuration c = initial;
    out.upfront = move_to(c, out.final_config, ledger);
    for (Request r : sigma) out.serve_costs.push_back(serve(c, r, ledger));
    out.total = ledger.total();
    return out;
}

} // namespace linelab::oracle
