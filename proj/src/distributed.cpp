#include "linelab/distributed.hpp"

#include <algorithm>

namespace linelab::dist {

const char* msg_kind_name(MsgKind k) {
    switch (k) {
        case MsgKind::ProbeLeft: return "ProbeLeft";
        case MsgKind::ProbeRight: return "ProbeRight";
        case MsgKind::RouteFound: return "RouteFound";
        case MsgKind::SizeExchange: return "SizeExchange";
        case MsgKind::FollowUp: return "FollowUp";
        case MsgKind::SwapRequest: return "SwapRequest";
        case MsgKind::Timer: return "Timer";
    }
    return "?";
}

namespace {
enum StageCode : long long {
    kNextProbe = 1,
    kBeginReversalPass = 2,
    kBeginSlide = 3,
    kComplete = 4,
};
} // namespace

DistributedGread::DistributedGread(int n, std::uint64_t seed)
    : config_(n), mirror_(n), nodes_(n), seed_(seed) {}

void DistributedGread::schedule(long long time, Message msg, bool network) {
    msg.gen = pending_.generation;
    if (network) {
        ledger_.message += 1;
        if (pending_.routing_active) pending_.route_hops += 1;
    }
    queue_.push(Event{time, seq_++, msg});
}

void DistributedGread::handle(const Event& ev) {
    if (ev.msg.gen != pending_.generation) return; // stale
    if (record_trace && ev.msg.kind != MsgKind::Timer)
        trace.push_back({ev.time, ev.msg.kind, ev.msg.from, ev.msg.to, ev.msg.value});
    switch (ev.msg.kind) {
        case MsgKind::ProbeLeft:
        case MsgKind::ProbeRight: handle_probe(ev); break;
        case MsgKind::RouteFound: handle_route_found(ev); break;
        case MsgKind::SizeExchange: handle_size_exchange(ev); break;
        case MsgKind::FollowUp: handle_follow_up(ev); break;
        case MsgKind::SwapRequest: handle_swap_request(ev); break;
        case MsgKind::Timer: handle_timer(ev); break;
    }
}

void DistributedGread::launch_probe(long long time) {
    int round = pending_.probe_round++;
    bool left = round % 2 == 0;
    long long budget = 1LL << (round / 2);
    NodeId u = pending_.req.u;
    Position pu = config_.position_of(u);

    Message timer;
    timer.kind = MsgKind::Timer;
    timer.to = u;
    timer.value = kNextProbe;
    schedule(time + 2 * budget + 1, timer, false);

    Position next = left ? pu - 1 : pu + 1;
    if (next < 1 || next > config_.size()) return; // the line ends here

    Message probe;
    probe.kind = left ? MsgKind::ProbeLeft : MsgKind::ProbeRight;
    probe.from = u;
    probe.to = config_.node_at(next);
    probe.origin = u;
    probe.target = pending_.req.v;
    probe.budget = budget - 1;
    probe.value = nodes_[u].list_size; // source attaches its sublist size
    schedule(time + 1, probe, true);
}

void DistributedGread::handle_probe(const Event& ev) {
    if (pending_.done || pending_.route_found) return;
    const Message& m = ev.msg;
    NodeId x = m.to;
    int dir = m.kind == MsgKind::ProbeLeft ? -1 : +1;

    if (x == m.target) {
        // reply toward the origin; the reply carries this end's sublist size
        Message found;
        found.kind = MsgKind::RouteFound;
        found.from = x;
        found.to = config_.node_at(config_.position_of(x) - dir);
        found.origin = m.origin;
        found.target = m.target;
        found.value = nodes_[x].list_size;
        found.aux = -dir; // travel direction back
        schedule(ev.time + 1, found, true);

        // the destination already knows both sizes; it informs its own far end
        long long merged = m.value + nodes_[x].list_size;
        NodeId fwd = nodes_[x].nbr[0];
        if (fwd != -1) {
            Message sz;
            sz.kind = MsgKind::SizeExchange;
            sz.from = x;
            sz.to = fwd;
            sz.value = merged;
            schedule(ev.time + 1, sz, true);
        }
        return;
    }

    if (m.budget > 0) {
        Position next = config_.position_of(x) + dir;
        if (next >= 1 && next <= config_.size()) {
            Message fwd = m;
            fwd.from = x;
            fwd.to = config_.node_at(next);
            fwd.budget = m.budget - 1;
            schedule(ev.time + 1, fwd, true);
        }
    }
}

void DistributedGread::handle_route_found(const Event& ev) {
    if (pending_.done) return;
    const Message& m = ev.msg;
    NodeId x = m.to;
    if (x != m.origin) {
        Message fwd = m;
        fwd.from = x;
        fwd.to = config_.node_at(config_.position_of(x) + static_cast<int>(m.aux));
        schedule(ev.time + 1, fwd, true);
        return;
    }
    pending_.route_found = true;
    pending_.found_size = m.value;
    begin_merge(ev.time);
}

void DistributedGread::begin_merge(long long time) {
    pending_.routing_active = false;
    pending_.plan = gread::plan_merge(config_, pending_.ev);
    long long su = static_cast<long long>(pending_.ev.path_u.size());
    long long sv = static_cast<long long>(pending_.ev.path_v.size());
    pending_.merged_size = su + sv;

    // the source side informs its own far end of the merged size
    NodeId u = pending_.req.u;
    NodeId fwd = nodes_[u].nbr[0];
    if (fwd != -1) {
        Message sz;
        sz.kind = MsgKind::SizeExchange;
        sz.from = u;
        sz.to = fwd;
        sz.value = pending_.merged_size;
        schedule(time + 1, sz, true);
    }

    long long chain_span = std::max(su, sv); // both exchange chains finish within this
    long long t0 = time + chain_span + 2;
    Message st;
    st.kind = MsgKind::Timer;
    st.to = pending_.req.u;
    if (pending_.plan.reverse) {
        st.value = kBeginReversalPass;
        st.aux = pending_.plan.mover_size - 1; // passes left
    } else {
        st.value = kBeginSlide;
    }
    schedule(t0, st, false);
}

void DistributedGread::handle_size_exchange(const Event& ev) {
    const Message& m = ev.msg;
    NodeId x = m.to;
    NodeId fwd = nodes_[x].other_neighbor(m.from);
    if (fwd == -1) {
        nodes_[x].list_size = m.value; // far end of the sublist
        return;
    }
    Message next = m;
    next.from = x;
    next.to = fwd;
    schedule(ev.time + 1, next, true);
}

void DistributedGread::handle_follow_up(const Event&) {
    // walker start times were attached when the stage began; nothing to do
}

void DistributedGread::begin_reversal_pass(long long time, long long passes_left) {
    if (passes_left <= 0) {
        begin_slide(time);
        return;
    }
    const auto& plan = pending_.plan;

    if (passes_left == plan.mover_size - 1) {
        // first pass: one follow-up sweep through the block announces the
        // whole reordering schedule
        for (Position p = plan.m_lo; p < plan.m_hi; ++p) {
            Message notify;
            notify.kind = MsgKind::FollowUp;
            notify.from = config_.node_at(p);
            notify.to = config_.node_at(p + 1);
            notify.value = passes_left;
            schedule(time + 1 + (p - plan.m_lo), notify, true);
        }
    }

    NodeId walker = config_.node_at(plan.m_lo);
    Message sw;
    sw.kind = MsgKind::SwapRequest;
    sw.from = walker;
    sw.value = passes_left; // swaps to perform
    sw.aux = +1;            // bubbling toward the high end of the block
    schedule(time + 1, sw, true);

    Message st;
    st.kind = MsgKind::Timer;
    st.to = pending_.req.u;
    st.value = kBeginReversalPass;
    st.aux = passes_left - 1;
    schedule(time + 1 + passes_left + 1, st, false);
}

void DistributedGread::begin_slide(long long time) {
    const auto& plan = pending_.plan;
    long long b = plan.mover_size;
    long long d = plan.slide_steps;
    if (d == 0) {
        complete_request(time + 1);
        return;
    }

    for (long long j = 0; j < b; ++j) {
        Position at = plan.dir > 0 ? plan.m_hi - static_cast<Position>(j)
                                   : plan.m_lo + static_cast<Position>(j);
        NodeId walker = config_.node_at(at);
        if (j > 0) { // head tells the next to follow up, and so on down the list
            Message notify;
            notify.kind = MsgKind::FollowUp;
            notify.from = config_.node_at(plan.dir > 0 ? at + 1 : at - 1);
            notify.to = walker;
            notify.value = d;
            schedule(time + 1, notify, true);
        }
        Message sw;
        sw.kind = MsgKind::SwapRequest;
        sw.from = walker;
        sw.value = d;
        sw.aux = plan.dir;
        schedule(time + 1 + j * d, sw, true);
    }

    Message st;
    st.kind = MsgKind::Timer;
    st.to = pending_.req.u;
    st.value = kComplete;
    schedule(time + 1 + b * d + 1, st, false);
}

void DistributedGread::handle_swap_request(const Event& ev) {
    const Message& m = ev.msg;
    NodeId walker = m.from;
    Position p = config_.position_of(walker);
    if (m.aux > 0) config_.swap_at(p, ledger_);
    else config_.swap_at(p - 1, ledger_);

    if (m.value > 1) {
        Message next = m;
        next.value = m.value - 1;
        schedule(ev.time + 1, next, true);
    }
}

void DistributedGread::handle_timer(const Event& ev) {
    if (pending_.done) return;
    switch (ev.msg.value) {
        case kNextProbe:
            if (!pending_.route_found) launch_probe(ev.time);
            break;
        case kBeginReversalPass: begin_reversal_pass(ev.time, ev.msg.aux); break;
        case kBeginSlide: begin_slide(ev.time); break;
        case kComplete: complete_request(ev.time); break;
        default: break;
    }
}

void DistributedGread::complete_request(long long time) {
    (void)time;
    NodeId u = pending_.req.u;
    NodeId v = pending_.req.v;
    nodes_[u].add_neighbor(v);
    nodes_[v].add_neighbor(u);
    for (NodeId x : {u, v}) {
        nodes_[x].end_bit = nodes_[x].degree() < 2;
        nodes_[x].list_size = pending_.merged_size;
    }

    long long dcost = serve(config_, pending_.req, ledger_);
    if (dcost != 1)
        throw PropertyViolation("merge protocol left the request endpoints apart");
    routes_.push_back({u, v, pending_.line_distance, pending_.route_hops, true});
    pending_.done = true;
}

long long DistributedGread::request(Request r) {
    if (r.u == r.v) throw UsageError("request endpoints must differ");
    long long serving0 = ledger_.serving;
    long long swaps0 = ledger_.migration;

    ++generation_;
    Pending fresh;
    fresh.req = r;
    fresh.generation = generation_;
    fresh.line_distance = config_.distance(r.u, r.v);
    pending_ = fresh;

    auto res = mirror_.add_edge(r);
    if (res.kind == AddEdgeKind::RejectedNonlinear)
        throw NonlinearDemandError("request breaks the linear demand");

    if (res.kind == AddEdgeKind::AlreadyPresent) {
        if (!nodes_[r.u].knows(r.v))
            throw PropertyViolation("repeat request between nodes that are not list neighbors");
        ledger_.message += 1; // one cached-direction hop
        if (record_trace) {
            MsgKind k = config_.position_of(r.v) < config_.position_of(r.u)
                            ? MsgKind::ProbeLeft
                            : MsgKind::ProbeRight;
            trace.push_back({0, k, r.u, r.v, 0});
        }
        long long d = serve(config_, r, ledger_);
        if (d != 1) throw PropertyViolation("repeat request served at distance != 1");
        routes_.push_back({r.u, r.v, pending_.line_distance, 1, false});
        return ledger_.serving - serving0 + ledger_.migration - swaps0;
    }

    pending_.ev = *res.merge;
    pending_.routing_active = true;
    launch_probe(0);
    while (!queue_.empty()) {
        Event ev = queue_.top();
        queue_.pop();
        handle(ev);
    }
    if (!pending_.done) throw PropertyViolation("merge protocol did not complete");
    return ledger_.serving - serving0 + ledger_.migration - swaps0;
}

DistLedgers run_distributed_gread(int n, std::span<const Request> sigma, std::uint64_t seed) {
    DistributedGread sim(n, seed);
    for (Request r : sigma) sim.request(r);
    return {sim.ledger().serving, sim.ledger().migration, sim.ledger().message};
}

} // namespace linelab::dist
