#include "linelab/classic.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace linelab::classic {

int ClassicList::index_of(int elem) const {
    for (int i = 0; i < size(); ++i)
        if (order[i] == elem) return i;
    throw UsageError("unknown list element " + std::to_string(elem));
}

long long mtf_serve(ClassicList& list, int elem) {
    int d = list.index_of(elem);
    list.order.erase(list.order.begin() + d);
    list.order.insert(list.order.begin(), elem);
    list.cursor = 0;
    return 2LL * d; // d cursor moves out, d swaps back to the front
}

ListTrace mtf_trace(std::vector<int> initial, std::span<const int> tau) {
    ClassicList list(std::move(initial));
    ListTrace tr;
    tr.states.push_back(list.order);
    for (int elem : tau) {
        mtf_serve(list, elem);
        tr.states.push_back(list.order);
    }
    return tr;
}

namespace {

int index_in(const std::vector<int>& state, int elem) {
    for (int i = 0; i < static_cast<int>(state.size()); ++i)
        if (state[i] == elem) return i;
    throw UsageError("element missing from trace state");
}

bool order_differs(const std::vector<int>& a, const std::vector<int>& b, int u, int v) {
    bool oa = index_in(a, u) < index_in(a, v);
    bool ob = index_in(b, u) < index_in(b, v);
    return oa != ob;
}

} // namespace

InversionBits inversion_bits(const ListTrace& mtf, const ListTrace& other, int u, int v) {
    if (u == v) throw UsageError("inversion_bits: u and v must differ");
    if (mtf.states.size() != other.states.size() || mtf.states.empty())
        throw UsageError("inversion_bits: traces must cover the same request sequence");
    if (mtf.states[0] != other.states[0])
        throw UsageError("inversion_bits: traces must start from the same list");

    InversionBits out;
    int m = mtf.steps();
    for (int i = 1; i <= m; ++i) {
        const auto& mtf_pre = mtf.states[i - 1];
        const auto& mtf_post = mtf.states[i];
        const auto& other_pre = other.states[i - 1];
        std::uint8_t b = order_differs(other_pre, mtf_pre, u, v) ? 1 : 0;
        std::uint8_t a = order_differs(other_pre, mtf_post, u, v) ? 1 : 0;

        int accessed = mtf_post.front();
        if (accessed == u || accessed == v) {
            int partner = accessed == u ? v : u;
            // MTF touched both iff the partner sat in front of the accessed one
            if (index_in(mtf_pre, partner) < index_in(mtf_pre, accessed) && b == a)
                throw PropertyViolation("inversion step without an order flip at request " +
                                        std::to_string(i));
        }
        out.bits.push_back(b);
        out.bits.push_back(a);
    }
    return out;
}

namespace {

// Lehmer rank of a permutation of 0..n-1; n <= 5 keeps everything tiny.
int perm_rank(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        int fact = 1;
        for (int f = 2; f <= n - 1 - i; ++f) fact *= f;
        rank += smaller * fact;
    }
    return rank;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Minimal cursor-model cost from list L (cursor at head) to every list
// order, required to touch elem along the way. BFS over
// (order, cursor, touched) with unit-cost operations. Moves touch the
// element in the new position; swaps are the relocation primitive for the
// requested element and must involve it, as in the access strategies of the
// source model (anything else would let the cursor ferry third elements
// around without ever touching them, which breaks the move-to-front
// guarantee).
std::vector<int> access_transition_costs(int n, const std::vector<int>& start, int elem) {
    static std::map<std::tuple<int, int, int>, std::vector<int>> cache;
    auto key = std::make_tuple(n, perm_rank(start), elem);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto perms = all_perms(n);
    int nperms = static_cast<int>(perms.size());
    auto state_id = [&](int rank, int cursor, int touched) {
        return (rank * n + cursor) * 2 + touched;
    };
    std::vector<int> dist(static_cast<size_t>(nperms) * n * 2, -1);

    std::queue<std::tuple<std::vector<int>, int, int>> q;
    int t0 = start[0] == elem ? 1 : 0;
    dist[state_id(perm_rank(start), 0, t0)] = 0;
    q.emplace(start, 0, t0);

    while (!q.empty()) {
        auto [ord, cur, touched] = q.front();
        q.pop();
        int d = dist[state_id(perm_rank(ord), cur, touched)];
        auto push = [&](const std::vector<int>& o2, int c2, int t2) {
            int id = state_id(perm_rank(o2), c2, t2);
            if (dist[id] == -1) {
                dist[id] = d + 1;
                q.emplace(o2, c2, t2);
            }
        };
        for (int dir : {-1, +1}) {
            int c2 = cur + dir;
            if (c2 < 0 || c2 >= n) continue;
            // move: touches the element in the new position
            push(ord, c2, touched || ord[c2] == elem);
            // swap: the cursor element changes places and the cursor follows
            // it; one side of the pair must be the requested element
            if (ord[cur] == elem || ord[c2] == elem) {
                auto o2 = ord;
                std::swap(o2[cur], o2[c2]);
                push(o2, c2, touched || ord[c2] == elem);
            }
        }
    }

    std::vector<int> best(nperms, -1);
    for (int r = 0; r < nperms; ++r)
        for (int c = 0; c < n; ++c) {
            int v = dist[state_id(r, c, 1)];
            if (v != -1 && (best[r] == -1 || v < best[r])) best[r] = v;
        }
    cache[key] = best;
    return best;
}

} // namespace

long long optimal_list_update(int n, std::span<const int> tau) {
    if (n < 1 || n > 5) throw UsageError("optimal_list_update: n must be in [1, 5]");
    if (tau.size() > 8) throw UsageError("optimal_list_update: at most 8 requests");
    for (int e : tau)
        if (e < 0 || e >= n) throw UsageError("optimal_list_update: element out of range");

    auto perms = all_perms(n);
    int nperms = static_cast<int>(perms.size());
    const long long inf = 1LL << 60;
    std::vector<long long> dp(nperms, inf);
    dp[0] = 0; // rank 0 is the identity order 0,1,...,n-1

    for (int e : tau) {
        std::vector<long long> next(nperms, inf);
        for (int r = 0; r < nperms; ++r) {
            if (dp[r] == inf) continue;
            auto costs = access_transition_costs(n, perms[r], e);
            for (int r2 = 0; r2 < nperms; ++r2)
                if (costs[r2] != -1) next[r2] = std::min(next[r2], dp[r] + costs[r2]);
        }
        dp = std::move(next);
    }
    return *std::min_element(dp.begin(), dp.end());
}

std::vector<Request> star_sequence(int n, int m) {
    if (n < 2) throw UsageError("star_sequence: n must be >= 2");
    if (m < 0) throw UsageError("star_sequence: m must be nonnegative");
    std::vector<Request> out;
    out.reserve(m);
    int leaf = 1;
    for (int i = 0; i < m; ++i) {
        out.push_back({0, leaf});
        leaf = leaf == n - 1 ? 1 : leaf + 1;
    }
    return out;
}

long long star_moving_center_cost(int n, int m) {
    Configuration c = Configuration::identity(n);
    CostLedger ledger;
    for (Request r : star_sequence(n, m)) {
        // walk the center adjacent to the leaf, then serve at distance 1
        while (c.distance(r.u, r.v) > 1) {
            Position p = c.position_of(r.u);
            c.swap_at(c.position_of(r.v) > p ? p : p - 1, ledger);
        }
        serve(c, r, ledger);
    }
    return ledger.total();
}

long long star_never_swap_cost(int n, int m) {
    Configuration c = Configuration::identity(n);
    CostLedger ledger;
    for (Request r : star_sequence(n, m)) serve(c, r, ledger);
    return ledger.total();
}

} // namespace linelab::classic
