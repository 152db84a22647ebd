#pragma once

#include <queue>
#include <span>
#include <vector>

#include "linelab/core.hpp"
#include "linelab/gread.hpp"

namespace linelab::dist {

enum class MsgKind { ProbeLeft, ProbeRight, RouteFound, SizeExchange, FollowUp, SwapRequest, Timer };

const char* msg_kind_name(MsgKind k);

// One network hop (or a local timer). Network hops cost one message unit
// each; Timer events are node-local and free.
struct Message {
    MsgKind kind = MsgKind::Timer;
    NodeId from = -1;
    NodeId to = -1;
    NodeId origin = -1;   // request source
    NodeId target = -1;   // request destination
    long long budget = 0; // probe hops remaining
    long long value = 0;  // size / walk count / stage payload
    long long aux = 0;    // direction or stage code
    long long gen = 0;    // request generation, for stale-event filtering
};

struct MessageRecord {
    long long time = 0;
    MsgKind kind = MsgKind::Timer;
    NodeId from = -1;
    NodeId to = -1;
    long long payload = 0;
};

// What every node knows locally: whether it ends its sublist, the sublist
// size if so, and its at-most-two sublist neighbors.
struct NodeLocalState {
    bool end_bit = true;
    long long list_size = 1; // meaningful only while end_bit holds
    NodeId nbr[2] = {-1, -1};

    int degree() const { return (nbr[0] != -1 ? 1 : 0) + (nbr[1] != -1 ? 1 : 0); }
    bool knows(NodeId v) const { return nbr[0] == v || nbr[1] == v; }
    void add_neighbor(NodeId v) {
        if (nbr[0] == -1) nbr[0] = v;
        else nbr[1] = v;
    }
    NodeId other_neighbor(NodeId not_this) const {
        if (nbr[0] != -1 && nbr[0] != not_this) return nbr[0];
        if (nbr[1] != -1 && nbr[1] != not_this) return nbr[1];
        return -1;
    }
};

struct RouteStats {
    NodeId u = -1;
    NodeId v = -1;
    long long line_distance = 0;
    long long hops = 0; // routing messages (probes + replies), or the single delivery hop
    bool first = false;
};

// Message-passing realization of the greedy adjoin algorithm: exponential
// search routing, size bookkeeping at sublist ends, merge by walker swaps.
// Requests are processed one at a time to quiescence on a deterministic
// event loop; swap decisions reuse the centralized planner so serving and
// migration ledgers match the centralized run exactly.
class DistributedGread {
public:
    DistributedGread(int n, std::uint64_t seed);

    // Runs the request to quiescence; returns serving + migration charged.
    long long request(Request r);

    const Configuration& config() const { return config_; }
    const CostLedger& ledger() const { return ledger_; }
    const RequestGraph& graph() const { return mirror_; }
    const std::vector<RouteStats>& routes() const { return routes_; }
    const NodeLocalState& node(NodeId v) const { return nodes_.at(v); }

    bool record_trace = false;
    std::vector<MessageRecord> trace;

private:
    struct Event {
        long long time;
        long long seq;
        Message msg;
        bool operator>(const Event& o) const {
            return time != o.time ? time > o.time : seq > o.seq;
        }
    };

    void schedule(long long time, Message msg, bool network);
    void handle(const Event& ev);

    void handle_probe(const Event& ev);
    void handle_route_found(const Event& ev);
    void handle_size_exchange(const Event& ev);
    void handle_follow_up(const Event& ev);
    void handle_swap_request(const Event& ev);
    void handle_timer(const Event& ev);

    void launch_probe(long long time);
    void begin_merge(long long time);
    void begin_reversal_pass(long long time, long long passes_left);
    void begin_slide(long long time);
    void complete_request(long long time);

    Configuration config_;
    RequestGraph mirror_; // ground truth for assertions and the planner
    CostLedger ledger_;
    std::vector<NodeLocalState> nodes_;
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
    long long seq_ = 0;
    std::uint64_t seed_;

    // transient per-request state
    struct Pending {
        Request req;
        long long generation = 0;
        bool route_found = false;
        bool done = false;
        bool routing_active = false;
        int probe_round = 0;
        long long route_hops = 0;
        long long line_distance = 0;
        MergeEvent ev;
        gread::MergePlan plan;
        long long merged_size = 0;
        long long found_size = 0; // destination sublist size from the reply
    } pending_;
    long long generation_ = 0;
    std::vector<RouteStats> routes_;
};

struct DistLedgers {
    long long serving = 0;
    long long swaps = 0;
    long long messages = 0;
};

DistLedgers run_distributed_gread(int n, std::span<const Request> sigma, std::uint64_t seed);

} // namespace linelab::dist
