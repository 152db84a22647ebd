#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linelab/rng.hpp"

namespace linelab {

using NodeId = int;
using Position = int; // 1-based slot on the line

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A request sequence whose graph is not a disjoint union of paths.
class NonlinearDemandError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked theorem-level invariant failed at runtime.
class PropertyViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

struct Request {
    NodeId u = 0;
    NodeId v = 0;
};

inline bool operator==(Request a, Request b) { return a.u == b.u && a.v == b.v; }

struct CostLedger {
    long long serving = 0;
    long long migration = 0;
    long long message = 0;

    long long total() const { return serving + migration + message; }
};

// Bijection between the n nodes and the line positions 1..n, kept with its
// inverse so both directions are O(1).
class Configuration {
public:
    explicit Configuration(int n) : pos_of_(n), node_at_(n + 1, -1) {
        if (n <= 0) throw UsageError("Configuration: n must be positive");
        for (NodeId v = 0; v < n; ++v) {
            pos_of_[v] = v + 1;
            node_at_[v + 1] = v;
        }
    }

    static Configuration identity(int n) { return Configuration(n); }

    static Configuration random(int n, Rng& rng) {
        Configuration c(n);
        // Fisher-Yates on the position array, inverse rebuilt afterwards
        for (int i = n - 1; i > 0; --i) {
            std::uniform_int_distribution<int> d(0, i);
            std::swap(c.pos_of_[i], c.pos_of_[d(rng)]);
        }
        for (NodeId v = 0; v < n; ++v) c.node_at_[c.pos_of_[v]] = v;
        return c;
    }

    static Configuration from_placement(const std::vector<Position>& placement) {
        int n = static_cast<int>(placement.size());
        Configuration c(n);
        c.pos_of_ = placement;
        std::fill(c.node_at_.begin(), c.node_at_.end(), -1);
        for (NodeId v = 0; v < n; ++v) {
            Position p = placement[v];
            if (p < 1 || p > n || c.node_at_[p] != -1)
                throw UsageError("from_placement: not a bijection onto 1..n");
            c.node_at_[p] = v;
        }
        return c;
    }

    int size() const { return static_cast<int>(pos_of_.size()); }

    Position position_of(NodeId v) const {
        check_node(v);
        return pos_of_[v];
    }

    NodeId node_at(Position p) const {
        if (p < 1 || p > size()) throw UsageError("node_at: position out of range");
        return node_at_[p];
    }

    int distance(NodeId u, NodeId v) const {
        check_node(u);
        check_node(v);
        int d = pos_of_[u] - pos_of_[v];
        return d < 0 ? -d : d;
    }

    // Exchanges the nodes on positions p and p+1; one migration unit.
    void swap_at(Position p, CostLedger& ledger) {
        if (p < 1 || p >= size()) throw UsageError("swap_at: position out of range");
        NodeId a = node_at_[p];
        NodeId b = node_at_[p + 1];
        node_at_[p] = b;
        node_at_[p + 1] = a;
        pos_of_[a] = p + 1;
        pos_of_[b] = p;
        ledger.migration += 1;
        assert(node_at_[pos_of_[a]] == a && node_at_[pos_of_[b]] == b);
    }

    bool consistent() const {
        for (NodeId v = 0; v < size(); ++v)
            if (pos_of_[v] < 1 || pos_of_[v] > size() || node_at_[pos_of_[v]] != v) return false;
        return true;
    }

    bool operator==(const Configuration& o) const { return pos_of_ == o.pos_of_; }
    bool operator!=(const Configuration& o) const { return !(*this == o); }

private:
    void check_node(NodeId v) const {
        if (v < 0 || v >= size()) throw UsageError("unknown node id " + std::to_string(v));
    }

    std::vector<Position> pos_of_; // node -> position
    std::vector<NodeId> node_at_;  // position -> node, slot 0 unused
};

inline long long serve(const Configuration& c, Request r, CostLedger& ledger) {
    if (r.u == r.v) throw UsageError("serve: request endpoints must differ");
    long long d = c.distance(r.u, r.v);
    ledger.serving += d;
    return d;
}

// Number of node pairs ordered differently by a and b; equals the minimum
// number of adjacent swaps transforming a into b.
long long kendall_distance(const Configuration& a, const Configuration& b);

// Transforms c into target by adjacent swaps along a shortest sequence,
// charging each swap to the ledger. Returns the number of swaps.
long long move_to(Configuration& c, const Configuration& target, CostLedger& ledger);

enum class AddEdgeKind { Merged, AlreadyPresent, RejectedNonlinear };

struct MergeEvent {
    Request edge;                // (u, v) as requested
    int handle_u = -1;           // component handles before the merge
    int handle_v = -1;
    int merged_handle = -1;
    std::vector<NodeId> path_u;  // u's component in path order, before the merge
    std::vector<NodeId> path_v;

    const std::vector<NodeId>& smaller() const {
        return path_u.size() <= path_v.size() ? path_u : path_v;
    }
    const std::vector<NodeId>& larger() const {
        return path_u.size() <= path_v.size() ? path_v : path_u;
    }
};

struct AddEdgeResult {
    AddEdgeKind kind;
    std::optional<MergeEvent> merge; // set iff kind == Merged
};

// Accumulated request edges kept as a disjoint union of paths. Each
// component is stored as a node sequence consistent with its edges.
class RequestGraph {
public:
    explicit RequestGraph(int n);

    int n() const { return n_; }

    AddEdgeResult add_edge(Request r);

    bool has_edge(NodeId u, NodeId v) const;
    int degree(NodeId v) const;

    int component_of(NodeId v) const;
    const std::vector<NodeId>& component_path(int handle) const;
    int component_count() const { return component_count_; }
    int largest_component_size() const;

    // Live handles, ordered by smallest member id (deterministic iteration).
    std::vector<int> component_handles() const;

    // Normalized (u < v) edge set.
    const std::set<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

private:
    void check_node(NodeId v) const;

    int n_;
    int component_count_;
    std::vector<int> comp_of_;               // node -> handle into paths_
    std::vector<std::vector<NodeId>> paths_; // retired handles become empty
    std::vector<int> degree_;
    std::set<std::pair<NodeId, NodeId>> edges_;
};

// Contract every online player implements: on each request it may first
// reconfigure (any number of adjacent swaps), then pays the serving distance
// in the new configuration. It never sees future requests.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    virtual long long on_request(Request r) = 0; // cost charged for this request
    virtual const Configuration& config() const = 0;
    virtual const CostLedger& ledger() const = 0;
    virtual long long last_swaps() const = 0; // swaps spent on the most recent request
    virtual std::string_view name() const = 0;
};

} // namespace linelab
