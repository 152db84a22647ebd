#include "linelab/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace linelab::adversary {

DistortionReport distortion(const Configuration& c, const RequestGraph& g) {
    if (c.size() != g.n()) throw UsageError("distortion: size mismatch");
    DistortionReport rep;

    for (int h : g.component_handles()) {
        const auto& path = g.component_path(h);
        if (path.size() < 2) continue;
        std::vector<long long> pos;
        pos.reserve(path.size());
        for (NodeId v : path) pos.push_back(c.position_of(v));
        std::sort(pos.begin(), pos.end());
        long long prefix = 0;
        for (size_t i = 0; i < pos.size(); ++i) {
            rep.total += static_cast<long long>(i) * pos[i] - prefix;
            prefix += pos[i];
        }
    }

    for (const auto& [u, v] : g.edges()) {
        long long d = c.distance(u, v);
        if (d > rep.max_edge_distance) {
            rep.max_edge_distance = d;
            rep.max_edge = Request{u, v};
        }
    }
    return rep;
}

Partition partition_xy(const Configuration& c) {
    int n = c.size();
    if (n < 3) throw UsageError("partition_xy: n must be >= 3");
    Partition part;
    part.x_end = (n + 2) / 3;                                 // ceil(n/3)
    part.y_begin = std::max(2 * n / 3, part.x_end + 2);       // keep C nonempty
    for (Position p = 1; p <= part.x_end; ++p) part.x.push_back(p);
    for (Position p = part.x_end + 1; p < part.y_begin; ++p) part.c.push_back(p);
    for (Position p = part.y_begin; p <= n; ++p) part.y.push_back(p);
    return part;
}

namespace {

struct CompInfo {
    int handle;
    long long hx = 0; // members placed on X
    long long hy = 0; // members placed on Y
    NodeId min_id = 0;
};

long long pairing_score(const std::vector<CompInfo>& comps, const std::vector<int>& f) {
    long long s = 0;
    for (size_t i = 0; i < comps.size(); ++i) s += comps[i].hx * comps[f[i]].hy;
    return s;
}

// Deterministic fallback: components ranked by X mass paired against
// components ranked by Y mass, skipping self-pairs.
std::vector<int> sorted_pairing(const std::vector<CompInfo>& comps) {
    int k = static_cast<int>(comps.size());
    std::vector<int> by_x(k), by_y(k);
    for (int i = 0; i < k; ++i) by_x[i] = by_y[i] = i;
    std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
        if (comps[a].hx != comps[b].hx) return comps[a].hx > comps[b].hx;
        return comps[a].min_id < comps[b].min_id;
    });
    std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
        if (comps[a].hy != comps[b].hy) return comps[a].hy > comps[b].hy;
        return comps[a].min_id < comps[b].min_id;
    });

    std::vector<int> f(k, -1);
    std::vector<bool> used(k, false);
    for (int a : by_x) {
        if (used[a]) continue;
        for (int b : by_y) {
            if (used[b] || b == a) continue;
            f[a] = b;
            f[b] = a;
            used[a] = used[b] = true;
            break;
        }
    }
    return f;
}

} // namespace

std::vector<Request> reveal_batch(AdversaryState& st, const Configuration& h, int samples) {
    const RequestGraph& g = st.graph;
    if (h.size() != g.n()) throw UsageError("reveal_batch: size mismatch");

    auto handles = g.component_handles();
    int k = static_cast<int>(handles.size());
    if (k < 2 || k % 2 != 0) throw UsageError("reveal_batch: component count must be even and >= 2");
    size_t ell = g.component_path(handles[0]).size();
    for (int hd : handles)
        if (g.component_path(hd).size() != ell)
            throw UsageError("reveal_batch: components must all have equal size");

    Partition part = partition_xy(h);
    std::vector<CompInfo> comps(k);
    for (int i = 0; i < k; ++i) {
        comps[i].handle = handles[i];
        const auto& path = g.component_path(handles[i]);
        comps[i].min_id = *std::min_element(path.begin(), path.end());
        for (NodeId v : path) {
            Position p = h.position_of(v);
            if (p <= part.x_end) ++comps[i].hx;
            else if (p >= part.y_begin) ++comps[i].hy;
        }
    }

    std::vector<int> best = sorted_pairing(comps);
    long long best_score = pairing_score(comps, best);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (int s = 0; s < samples; ++s) {
        std::shuffle(idx.begin(), idx.end(), st.rng);
        std::vector<int> f(k);
        for (int i = 0; i < k; i += 2) {
            f[idx[i]] = idx[i + 1];
            f[idx[i + 1]] = idx[i];
        }
        long long score = pairing_score(comps, f);
        if (score > best_score) {
            best_score = score;
            best = f;
        }
    }

    // Commit one edge per pair: among the endpoint pairs, the farthest
    // apart; ties resolved lexicographically.
    std::vector<Request> batch;
    for (int i = 0; i < k; ++i) {
        int j = best[i];
        if (j < i) continue;
        const auto& pi = g.component_path(comps[i].handle);
        const auto& pj = g.component_path(comps[j].handle);
        std::vector<NodeId> ei{pi.front()};
        if (pi.back() != pi.front()) ei.push_back(pi.back());
        std::vector<NodeId> ej{pj.front()};
        if (pj.back() != pj.front()) ej.push_back(pj.back());

        long long best_d = -1;
        Request pick{0, 0};
        for (NodeId a : ei)
            for (NodeId b : ej) {
                long long d = h.distance(a, b);
                Request cand{std::min(a, b), std::max(a, b)};
                bool better = d > best_d ||
                              (d == best_d && (cand.u < pick.u || (cand.u == pick.u && cand.v < pick.v)));
                if (better) {
                    best_d = d;
                    pick = cand;
                }
            }
        batch.push_back(pick);
    }

    for (Request r : batch) {
        auto res = st.graph.add_edge(r);
        if (res.kind != AddEdgeKind::Merged)
            throw PropertyViolation("batch edge did not concatenate two sublists");
    }
    st.batch_level += 1;
    return batch;
}

long long swap_distortion_delta(const Configuration& c, const RequestGraph& g, Position p) {
    Configuration moved = c;
    CostLedger scratch;
    moved.swap_at(p, scratch);
    long long delta = distortion(moved, g).total - distortion(c, g).total;
    long long ell = g.largest_component_size();
    if (std::abs(delta) > 2 * ell)
        throw PropertyViolation("adjacent swap changed distortion by more than 2l");
    return delta;
}

AdversaryResult adversary_run(int n, double epsilon, OnlineAlgorithm& on, std::uint64_t seed,
                              const AdversaryOptions& opts) {
    if (n < 9 || (n & (n - 1)) != 0)
        throw UsageError("adversary_run: n must be a power of two, n >= 16");
    if (epsilon <= 0.0 || epsilon > 1.0) throw UsageError("adversary_run: epsilon in (0, 1]");
    if (on.config().size() != n) throw UsageError("adversary_run: algorithm has wrong size");

    int p = 0;
    while ((1 << (p + 1)) <= n) ++p;
    int stop_exp = static_cast<int>(std::ceil(epsilon * p - 1e-9));

    AdversaryResult result;
    AdversaryState st(n, epsilon, seed);

    for (int rep = 0; rep < opts.repeats; ++rep) {
        if (rep > 0) {
            st.graph = RequestGraph(n); // fresh construction against the same ON
            st.batch_level = 0;
        }
        while (st.batch_level < stop_exp) {
            reveal_batch(st, on.config(), opts.pairing_samples);
            long long ell = 1LL << st.batch_level;

            DistortionReport start = distortion(on.config(), st.graph);
            st.last_batch_distortion = start.total;
            long long budget = ell * n;
            long long cost0 = on.ledger().serving + on.ledger().migration;

            long long issued = 0;
            while (issued < budget) {
                DistortionReport rep_now = distortion(on.config(), st.graph);
                if (static_cast<double>(rep_now.total) <
                    opts.halve_threshold * static_cast<double>(start.total))
                    break;
                Request r = *rep_now.max_edge;
                on.on_request(r);
                result.sequence.push_back(r);
                ++issued;
            }

            PhaseRecord rec;
            rec.n = n;
            rec.epsilon = epsilon;
            rec.batch_level = st.batch_level;
            rec.phase_requests = issued;
            rec.phase_on_cost = on.ledger().serving + on.ledger().migration - cost0;
            rec.distortion_start = start.total;
            rec.distortion_end = distortion(on.config(), st.graph).total;
            rec.max_edge_dist = start.max_edge_distance;
            result.phases.push_back(rec);
        }
    }
    return result;
}

} // namespace linelab::adversary
