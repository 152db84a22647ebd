#include "linelab/core.hpp"

#include <algorithm>

namespace linelab {

long long kendall_distance(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) throw UsageError("kendall_distance: size mismatch");
    int n = a.size();
    long long inversions = 0;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            bool oa = a.position_of(u) < a.position_of(v);
            bool ob = b.position_of(u) < b.position_of(v);
            if (oa != ob) ++inversions;
        }
    return inversions;
}

long long move_to(Configuration& c, const Configuration& target, CostLedger& ledger) {
    if (c.size() != target.size()) throw UsageError("move_to: size mismatch");
    int n = c.size();
    long long swaps = 0;
    // Bubble toward the target order; every swap fixes one inversion, so the
    // sequence has exactly kendall_distance(c, target) steps.
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (Position p = 1; p < n; ++p) {
            if (target.position_of(c.node_at(p)) > target.position_of(c.node_at(p + 1))) {
                c.swap_at(p, ledger);
                ++swaps;
                dirty = true;
            }
        }
    }
    return swaps;
}

RequestGraph::RequestGraph(int n) : n_(n), component_count_(n) {
    if (n <= 0) throw UsageError("RequestGraph: n must be positive");
    comp_of_.resize(n);
    degree_.assign(n, 0);
    paths_.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        comp_of_[v] = v;
        paths_[v] = {v};
    }
}

void RequestGraph::check_node(NodeId v) const {
    if (v < 0 || v >= n_) throw UsageError("unknown node id " + std::to_string(v));
}

bool RequestGraph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

int RequestGraph::degree(NodeId v) const {
    check_node(v);
    return degree_[v];
}

int RequestGraph::component_of(NodeId v) const {
    check_node(v);
    return comp_of_[v];
}

const std::vector<NodeId>& RequestGraph::component_path(int handle) const {
    if (handle < 0 || handle >= static_cast<int>(paths_.size()) || paths_[handle].empty())
        throw UsageError("invalid component handle");
    return paths_[handle];
}

int RequestGraph::largest_component_size() const {
    size_t best = 0;
    for (const auto& p : paths_) best = std::max(best, p.size());
    return static_cast<int>(best);
}

std::vector<int> RequestGraph::component_handles() const {
    std::vector<int> out;
    for (int h = 0; h < static_cast<int>(paths_.size()); ++h)
        if (!paths_[h].empty()) out.push_back(h);
    std::sort(out.begin(), out.end(), [this](int a, int b) {
        NodeId ma = *std::min_element(paths_[a].begin(), paths_[a].end());
        NodeId mb = *std::min_element(paths_[b].begin(), paths_[b].end());
        return ma < mb;
    });
    return out;
}

AddEdgeResult RequestGraph::add_edge(Request r) {
    check_node(r.u);
    check_node(r.v);
    if (r.u == r.v) throw UsageError("add_edge: endpoints must differ");

    if (has_edge(r.u, r.v)) return {AddEdgeKind::AlreadyPresent, std::nullopt};
    if (comp_of_[r.u] == comp_of_[r.v]) return {AddEdgeKind::RejectedNonlinear, std::nullopt};
    if (degree_[r.u] >= 2 || degree_[r.v] >= 2) return {AddEdgeKind::RejectedNonlinear, std::nullopt};

    MergeEvent ev;
    ev.edge = r;
    ev.handle_u = comp_of_[r.u];
    ev.handle_v = comp_of_[r.v];
    ev.path_u = paths_[ev.handle_u];
    ev.path_v = paths_[ev.handle_v];

    // Orient u's path to end at u and v's path to start at v, then concatenate.
    std::vector<NodeId> merged = ev.path_u;
    if (merged.front() == r.u && merged.size() > 1) std::reverse(merged.begin(), merged.end());
    assert(merged.back() == r.u);
    std::vector<NodeId> tail = ev.path_v;
    if (tail.back() == r.v && tail.size() > 1) std::reverse(tail.begin(), tail.end());
    assert(tail.front() == r.v);
    merged.insert(merged.end(), tail.begin(), tail.end());

    int handle = static_cast<int>(paths_.size());
    paths_.push_back(std::move(merged));
    for (NodeId x : paths_[handle]) comp_of_[x] = handle;
    paths_[ev.handle_u].clear();
    paths_[ev.handle_v].clear();
    ev.merged_handle = handle;

    degree_[r.u] += 1;
    degree_[r.v] += 1;
    edges_.insert({std::min(r.u, r.v), std::max(r.u, r.v)});
    component_count_ -= 1;

    return {AddEdgeKind::Merged, std::move(ev)};
}

} // namespace linelab
