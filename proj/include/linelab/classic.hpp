#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linelab/core.hpp"

namespace linelab::classic {

// Unordered list under the cursor cost model: the cursor starts at the head
// on every request; moving it one slot costs 1 and touches the element
// there, swapping the cursor's element with a neighbor costs 1 and moves the
// cursor along with its element.
struct ClassicList {
    std::vector<int> order; // front at index 0
    int cursor = 0;

    explicit ClassicList(int n) : order(n) {
        for (int i = 0; i < n; ++i) order[i] = i;
    }
    explicit ClassicList(std::vector<int> o) : order(std::move(o)) {}

    int size() const { return static_cast<int>(order.size()); }
    int index_of(int elem) const;
};

// Serves one access with move-to-front: walk the cursor to the element
// (depth d costs d moves), then swap it back to the head (d swaps).
// Returns 2d and leaves the accessed element at the front.
long long mtf_serve(ClassicList& list, int elem);

// States over time: states[0] is the initial list, states[i] the list after
// the i-th access.
struct ListTrace {
    std::vector<std::vector<int>> states;

    int steps() const { return static_cast<int>(states.size()) - 1; }
};

ListTrace mtf_trace(std::vector<int> initial, std::span<const int> tau);

// Alternating bits b_1 a_1 ... b_m a_m for one element pair: b_i compares
// the relative order of (u, v) in the reference trace before its i-th access
// with MTF's order before MTF's i-th access, a_i with MTF's order after.
struct InversionBits {
    std::vector<std::uint8_t> bits; // length 2m
};

// Derives the accessed element of step i from the MTF trace (it is the
// element MTF brought to the front). Whenever that access touches both u and
// v, checks that it flips their relative order against the reference
// (throws PropertyViolation otherwise).
InversionBits inversion_bits(const ListTrace& mtf, const ListTrace& other, int u, int v);

// Exact offline optimum for the cursor cost model, by BFS over
// (list order, cursor, touched) states per request. Guarded at n <= 5 and
// |tau| <= 8.
long long optimal_list_update(int n, std::span<const int> tau);

// m requests cycling (c, v_1), ..., (c, v_{n-1}), (c, v_1), ... where node 0
// plays c and nodes 1..n-1 the leaves.
std::vector<Request> star_sequence(int n, int m);

// Line-model cost of serving the star cycle while walking the center next
// to the upcoming leaf (serve-after-reconfigure accounting).
long long star_moving_center_cost(int n, int m);

// Line-model cost of the same cycle with a static identity placement.
long long star_never_swap_cost(int n, int m);

} // namespace linelab::classic
