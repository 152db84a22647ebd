#include "linelab/gread.hpp"

#include <algorithm>
#include <cstdlib>

namespace linelab::gread {

int MergeTree::leaf(NodeId v) {
    Node node;
    node.members = {v};
    nodes_.push_back(std::move(node));
    return node_count() - 1;
}

int MergeTree::merge(int a, int b) {
    Node node;
    node.left = a;
    node.right = b;
    node.weight = nodes_.at(a).weight + nodes_.at(b).weight;
    node.members.reserve(nodes_[a].members.size() + nodes_[b].members.size());
    std::merge(nodes_[a].members.begin(), nodes_[a].members.end(), nodes_[b].members.begin(),
               nodes_[b].members.end(), std::back_inserter(node.members));
    nodes_.push_back(std::move(node));
    ++internal_;
    return node_count() - 1;
}

long long MergeTree::sum_min_children() const {
    long long sum = 0;
    for (const auto& nd : nodes_)
        if (nd.left != -1) sum += std::min(nodes_[nd.left].weight, nodes_[nd.right].weight);
    return sum;
}

int MergeTree::find_by_members(const std::vector<NodeId>& sorted_members) const {
    for (int i = 0; i < node_count(); ++i)
        if (nodes_[i].members == sorted_members) return i;
    return -1;
}

long long relocation_cost_bound(const MergeTree& tree, int n) {
    return static_cast<long long>(n) * tree.sum_min_children();
}

namespace {

std::pair<Position, Position> block_of(const Configuration& c, const std::vector<NodeId>& path) {
    Position lo = c.position_of(path.front());
    Position hi = lo;
    for (NodeId v : path) {
        lo = std::min(lo, c.position_of(v));
        hi = std::max(hi, c.position_of(v));
    }
    return {lo, hi};
}

} // namespace

MergePlan plan_merge(const Configuration& c, const MergeEvent& ev) {
    int n = c.size();
    int su = static_cast<int>(ev.path_u.size());
    int sv = static_cast<int>(ev.path_v.size());
    NodeId u = ev.edge.u;
    NodeId v = ev.edge.v;

    bool mover_is_u;
    if (su != sv) {
        mover_is_u = su < sv;
    } else {
        // doubled distance from the line's center, to stay in integers
        long long du = std::abs(2LL * c.position_of(u) - (n + 1));
        long long dv = std::abs(2LL * c.position_of(v) - (n + 1));
        mover_is_u = du != dv ? du > dv : u < v;
    }

    const auto& mover_path = mover_is_u ? ev.path_u : ev.path_v;
    const auto& stat_path = mover_is_u ? ev.path_v : ev.path_u;
    NodeId a = mover_is_u ? u : v; // mover's incident endpoint
    NodeId t = mover_is_u ? v : u; // stationary incident endpoint

    auto [m_lo, m_hi] = block_of(c, mover_path);
    auto [s_lo, s_hi] = block_of(c, stat_path);

    MergePlan plan;
    plan.mover_is_u = mover_is_u;
    plan.m_lo = m_lo;
    plan.m_hi = m_hi;
    plan.mover_size = static_cast<int>(mover_path.size());

    // The mover lands on the side of the stationary block where t sits; for
    // a stationary singleton it lands on its own side (no crossing).
    bool land_left =
        stat_path.size() == 1 ? m_hi < s_lo : c.position_of(t) == s_lo;

    if (land_left) {
        if (m_hi < s_lo) {
            plan.dir = +1;
            plan.slide_steps = s_lo - 1 - m_hi;
        } else {
            plan.dir = -1;
            plan.slide_steps = m_lo - s_lo; // crosses the stationary block
        }
        plan.reverse = c.position_of(a) != m_hi;
    } else {
        if (m_lo > s_hi) {
            plan.dir = -1;
            plan.slide_steps = m_lo - (s_hi + 1);
        } else {
            plan.dir = +1;
            plan.slide_steps = s_hi - m_hi;
        }
        plan.reverse = c.position_of(a) != m_lo;
    }
    return plan;
}

long long apply_merge_plan(Configuration& c, const MergePlan& plan, CostLedger& ledger) {
    int b = plan.mover_size;
    long long swaps = 0;

    if (plan.reverse) {
        for (int pass = 1; pass < b; ++pass)
            for (Position p = plan.m_lo; p < plan.m_lo + b - pass; ++p) {
                c.swap_at(p, ledger);
                ++swaps;
            }
    }

    Position lo = plan.m_lo;
    Position hi = plan.m_hi;
    for (int s = 0; s < plan.slide_steps; ++s) {
        if (plan.dir > 0) {
            for (Position p = hi; p >= lo; --p) c.swap_at(p, ledger);
            ++lo;
            ++hi;
        } else {
            for (Position p = lo - 1; p <= hi - 1; ++p) c.swap_at(p, ledger);
            --lo;
            --hi;
        }
        swaps += b;
    }
    return swaps;
}

GreadState::GreadState(Configuration initial)
    : config_(std::move(initial)), graph_(config_.size()) {}

long long GreadState::step(Request r) {
    ++steps_;
    last_swaps_ = 0;

    auto res = graph_.add_edge(r);
    if (res.kind == AddEdgeKind::RejectedNonlinear)
        throw NonlinearDemandError("request (" + std::to_string(r.u) + "," + std::to_string(r.v) +
                                   ") breaks the linear demand");

    if (res.kind == AddEdgeKind::AlreadyPresent) {
        long long d = serve(config_, r, ledger_);
        if (d != 1) // contiguity keeps request-graph edges adjacent
            throw PropertyViolation("repeat request served at distance != 1");
        return d;
    }

    const MergeEvent& ev = *res.merge;
    MergePlan plan = plan_merge(config_, ev);
    last_swaps_ = apply_merge_plan(config_, plan, ledger_);

    auto tree_node = [this](int handle, const std::vector<NodeId>& path) {
        auto it = tree_node_of_.find(handle);
        if (it != tree_node_of_.end()) return it->second;
        assert(path.size() == 1);
        return tree_.leaf(path.front());
    };
    int tu = tree_node(ev.handle_u, ev.path_u);
    int tv = tree_node(ev.handle_v, ev.path_v);
    tree_node_of_.erase(ev.handle_u);
    tree_node_of_.erase(ev.handle_v);
    tree_node_of_[ev.merged_handle] = tree_.merge(tu, tv);

    int small = static_cast<int>(ev.smaller().size());
    int large = static_cast<int>(ev.larger().size());
    merges_.push_back({steps_, small, large, last_swaps_,
                       static_cast<long long>(config_.size()) * small});

    long long d = serve(config_, r, ledger_);
    if (d != 1)
        throw PropertyViolation("merged request endpoints not adjacent after relocation");
    return last_swaps_ + d;
}

bool GreadState::contiguous() const {
    for (int h : graph_.component_handles()) {
        const auto& path = graph_.component_path(h);
        if (path.size() < 2) continue;
        int step = config_.position_of(path[1]) - config_.position_of(path[0]);
        if (step != 1 && step != -1) return false;
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (config_.position_of(path[i + 1]) - config_.position_of(path[i]) != step)
                return false;
    }
    return true;
}

namespace {

long long layout_displacement(const Configuration& c,
                              const std::vector<const std::vector<NodeId>*>& comps,
                              const std::vector<int>& order, unsigned orient_mask,
                              const std::vector<int>& mask_bit) {
    long long total = 0;
    Position next = 1;
    for (int idx : order) {
        const auto& path = *comps[idx];
        bool reversed = mask_bit[idx] >= 0 && (orient_mask >> mask_bit[idx] & 1u);
        int len = static_cast<int>(path.size());
        for (int i = 0; i < len; ++i) {
            NodeId v = reversed ? path[len - 1 - i] : path[i];
            total += std::abs(c.position_of(v) - (next + i));
        }
        next += len;
    }
    return total;
}

} // namespace

PotentialResult potential(const Configuration& c, const RequestGraph& g) {
    if (c.size() != g.n()) throw UsageError("potential: size mismatch");
    std::vector<const std::vector<NodeId>*> comps;
    for (int h : g.component_handles()) comps.push_back(&g.component_path(h));
    int k = static_cast<int>(comps.size());

    if (c.size() <= 8) {
        std::vector<int> mask_bit(k, -1);
        int bits = 0;
        for (int i = 0; i < k; ++i)
            if (comps[i]->size() > 1) mask_bit[i] = bits++;

        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;

        long long best = -1;
        do {
            for (unsigned mask = 0; mask < (1u << bits); ++mask) {
                long long val = layout_displacement(c, comps, order, mask, mask_bit);
                if (best < 0 || val < best) best = val;
            }
        } while (std::next_permutation(order.begin(), order.end()));
        return {best, true};
    }

    // Greedy upper estimate: components sorted by mean position, each with
    // its cheaper orientation for the segment it receives.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    auto mean2 = [&](int i) { // doubled mean to stay integral
        long long s = 0;
        for (NodeId v : *comps[i]) s += c.position_of(v);
        return 2 * s / static_cast<long long>(comps[i]->size());
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        long long ma = mean2(a), mb = mean2(b);
        if (ma != mb) return ma < mb;
        return comps[a]->front() < comps[b]->front();
    });

    long long total = 0;
    Position next = 1;
    for (int idx : order) {
        const auto& path = *comps[idx];
        int len = static_cast<int>(path.size());
        long long fwd = 0, rev = 0;
        for (int i = 0; i < len; ++i) {
            fwd += std::abs(c.position_of(path[i]) - (next + i));
            rev += std::abs(c.position_of(path[len - 1 - i]) - (next + i));
        }
        total += std::min(fwd, rev);
        next += len;
    }
    return {total, false};
}

} // namespace linelab::gread
