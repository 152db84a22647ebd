#pragma once

#include <unordered_map>
#include <vector>

#include "linelab/core.hpp"

namespace linelab::gread {

// Binary forest over the sublists created by first-occurrence merging edges.
// Leaves are the singletons that ever took part in a merge; the weight of a
// node is the number of leaves below it.
class MergeTree {
public:
    struct Node {
        int left = -1;
        int right = -1;
        long long weight = 1;
        std::vector<NodeId> members; // sorted
    };

    int leaf(NodeId v);
    int merge(int a, int b);

    const Node& node(int id) const { return nodes_.at(id); }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int internal_count() const { return internal_; }

    // Sum over internal nodes of min(weight(left), weight(right)).
    long long sum_min_children() const;

    // Node whose member set equals the given sorted list, or -1.
    int find_by_members(const std::vector<NodeId>& sorted_members) const;

private:
    std::vector<Node> nodes_;
    int internal_ = 0;
};

// n * sum_min_children: an upper bound on the migration cost of the run
// that produced the tree.
long long relocation_cost_bound(const MergeTree& tree, int n);

// How one merging request is realized: the mover block is reversed in place
// when its request endpoint faces away from the landing side, then slid one
// position at a time until the two request endpoints are adjacent.
struct MergePlan {
    bool mover_is_u = false; // whether the moving component is u's
    bool reverse = false;
    int slide_steps = 0;
    int dir = 0;       // +1 slide right, -1 slide left
    int m_lo = 0;      // mover block before any operation
    int m_hi = 0;
    int mover_size = 0;

    long long swap_count() const {
        long long b = mover_size;
        return (reverse ? b * (b - 1) / 2 : 0) + b * slide_steps;
    }
};

// Decides mover, orientation and travel for a merging edge. The smaller
// component moves; on equal sizes the one whose incident endpoint lies
// farther from the line's center, then the one with the smaller endpoint id.
MergePlan plan_merge(const Configuration& c, const MergeEvent& ev);

// Executes the plan with adjacent swaps, charging each to the ledger.
long long apply_merge_plan(Configuration& c, const MergePlan& plan, CostLedger& ledger);

struct MergeRecord {
    long long step = 0; // 1-based request index
    int size_small = 0;
    int size_large = 0;
    long long swaps = 0;
    long long bound_n_min = 0;
};

// Online state: on each first-occurrence merging edge, adjoin the smaller
// sublist to the larger one so that every component stays contiguous in
// path order, then serve at distance 1. Repeat requests serve without
// reconfiguring.
class GreadState {
public:
    explicit GreadState(Configuration initial);

    long long step(Request r); // cost charged for this request

    const Configuration& config() const { return config_; }
    const RequestGraph& graph() const { return graph_; }
    const MergeTree& tree() const { return tree_; }
    const CostLedger& ledger() const { return ledger_; }
    const std::vector<MergeRecord>& merges() const { return merges_; }
    long long last_swaps() const { return last_swaps_; }
    long long steps_taken() const { return steps_; }

    // Every component occupies consecutive positions in path order or its
    // reverse.
    bool contiguous() const;

private:
    Configuration config_;
    RequestGraph graph_;
    MergeTree tree_;
    CostLedger ledger_;
    std::unordered_map<int, int> tree_node_of_; // component handle -> tree node
    std::vector<MergeRecord> merges_;
    long long last_swaps_ = 0;
    long long steps_ = 0;
};

struct PotentialResult {
    long long value = 0;
    bool exact = true;
};

// Displacement between h and the closest embedding that lays every
// component contiguously in path order. Exact (brute force over component
// orders and orientations) for n <= 8; a greedy upper estimate above that.
PotentialResult potential(const Configuration& c, const RequestGraph& g);

} // namespace linelab::gread
