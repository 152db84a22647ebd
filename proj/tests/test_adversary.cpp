#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "linelab/adversary.hpp"
#include "linelab/oracle.hpp"
#include "linelab/sim.hpp"

using namespace linelab;
using namespace linelab::adversary;

TEST_CASE("distortion sums closure pairs and finds the worst edge") {
    RequestGraph empty(4);
    auto rep = distortion(Configuration::identity(4), empty);
    CHECK(rep.total == 0);
    CHECK_FALSE(rep.max_edge.has_value());

    RequestGraph g(3);
    g.add_edge({0, 1});
    g.add_edge({1, 2});
    auto rep3 = distortion(Configuration::identity(3), g);
    CHECK(rep3.total == 4); // 1 + 1 + 2
    CHECK(rep3.max_edge_distance == 1);
}

TEST_CASE("contiguous components follow the cubic closed form") {
    for (int ell = 2; ell <= 6; ++ell) {
        RequestGraph g(ell);
        for (int i = 0; i + 1 < ell; ++i) g.add_edge({i, i + 1});
        auto rep = distortion(Configuration::identity(ell), g);
        // brute force over the closure pairs
        long long brute = 0;
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j) brute += j - i;
        CHECK(rep.total == brute);
        CHECK(rep.total == (static_cast<long long>(ell) * ell * ell - ell) / 6);
    }
}

TEST_CASE("line partition keeps the ends a centre apart") {
    auto p9 = partition_xy(Configuration::identity(9));
    CHECK(p9.x == std::vector<Position>{1, 2, 3});
    CHECK(p9.c == std::vector<Position>{4, 5});
    CHECK(p9.y == std::vector<Position>{6, 7, 8, 9});

    auto p3 = partition_xy(Configuration::identity(3));
    CHECK(p3.x == std::vector<Position>{1});
    CHECK(p3.c == std::vector<Position>{2});
    CHECK(p3.y == std::vector<Position>{3});

    CHECK_THROWS_AS(partition_xy(Configuration::identity(2)), UsageError);

    for (int n = 3; n <= 40; ++n) {
        auto part = partition_xy(Configuration::identity(n));
        CHECK(!part.c.empty());
        long long c_size = static_cast<long long>(part.c.size());
        for (Position x : part.x)
            for (Position y : part.y) CHECK(std::abs(x - y) >= c_size);
    }
}

TEST_CASE("reveal_batch pairs components and halves their count") {
    SUBCASE("two components leave a single pairing") {
        AdversaryState st(4, 1.0, 42);
        st.graph.add_edge({0, 1});
        st.graph.add_edge({2, 3});
        auto batch = reveal_batch(st, Configuration::identity(4));
        REQUIRE(batch.size() == 1);
        CHECK(st.graph.component_count() == 1);
        CHECK(st.graph.largest_component_size() == 4);
    }

    SUBCASE("the chosen pairing is at least as good as the matching average") {
        int n = 8;
        AdversaryState st(n, 1.0, 7);
        Configuration id = Configuration::identity(n);
        auto batch = reveal_batch(st, id);
        CHECK(batch.size() == 4);
        CHECK(st.graph.component_count() == 4);
        for (int h : st.graph.component_handles())
            CHECK(st.graph.component_path(h).size() == 2);

        // brute force every fixed-point-free pairing of the 8 singletons
        auto part = partition_xy(id);
        auto hx = [&](NodeId v) { return id.position_of(v) <= part.x_end ? 1 : 0; };
        auto hy = [&](NodeId v) { return id.position_of(v) >= part.y_begin ? 1 : 0; };

        std::vector<int> elems(n);
        std::iota(elems.begin(), elems.end(), 0);
        std::vector<long long> scores;
        // enumerate perfect matchings recursively
        auto enumerate = [&](auto&& self, std::vector<int>& rest, long long acc) -> void {
            if (rest.empty()) {
                scores.push_back(acc);
                return;
            }
            int a = rest[0];
            for (size_t i = 1; i < rest.size(); ++i) {
                int b = rest[i];
                std::vector<int> next;
                for (size_t j = 1; j < rest.size(); ++j)
                    if (j != i) next.push_back(rest[j]);
                self(self, next, acc + hx(a) * hy(b) + hx(b) * hy(a));
            }
        };
        enumerate(enumerate, elems, 0);
        REQUIRE(scores.size() == 105);

        long long chosen = 0;
        for (Request r : batch) chosen += hx(r.u) * hy(r.v) + hx(r.v) * hy(r.u);
        double average = std::accumulate(scores.begin(), scores.end(), 0.0) / scores.size();
        CHECK(static_cast<double>(chosen) >= average);
        CHECK(chosen == *std::max_element(scores.begin(), scores.end()));
    }

    SUBCASE("uneven components are rejected") {
        AdversaryState st(4, 1.0, 1);
        st.graph.add_edge({0, 1});
        CHECK_THROWS_AS(reveal_batch(st, Configuration::identity(4)), UsageError);
    }
}

TEST_CASE("adjacent swaps move distortion by at most twice the sublist size") {
    RequestGraph empty(5);
    CHECK(swap_distortion_delta(Configuration::identity(5), empty, 2) == 0);

    RequestGraph one(5);
    one.add_edge({0, 1});
    CHECK(swap_distortion_delta(Configuration::identity(5), one, 3) == 0);

    Rng rng = make_rng(31, "lemma3-unit");
    for (int t = 0; t < 100; ++t) {
        int n = 2 + t % 9;
        Configuration c = Configuration::random(n, rng);
        RequestGraph g(n);
        std::vector<NodeId> path(n);
        std::iota(path.begin(), path.end(), 0);
        std::shuffle(path.begin(), path.end(), rng);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int j = 0; j + 1 < n; ++j)
            if (coin(rng)) g.add_edge({path[j], path[j + 1]});
        std::uniform_int_distribution<int> pos(1, n - 1);
        long long delta = swap_distortion_delta(c, g, pos(rng));
        CHECK(std::abs(delta) <= 2LL * g.largest_component_size());
    }
}

TEST_CASE("the adversary alternates batches and max-distortion requests") {
    int n = 16;
    sim::NeverSwap on(Configuration::identity(n));
    auto result = adversary_run(n, 1.0, on, 99);

    // epsilon = 1 runs batches down to a single sublist: log2(16) phases
    CHECK(result.phases.size() == 4);
    // the revealed graph halves the component count per batch
    int expected_level = 1;
    for (const auto& ph : result.phases) {
        CHECK(ph.batch_level == expected_level);
        ++expected_level;
        CHECK(ph.phase_requests <= (1LL << ph.batch_level) * n);
        CHECK(ph.distortion_start > 0);
        CHECK(ph.max_edge_dist >= 1);
    }
    CHECK(static_cast<long long>(result.sequence.size()) <= 4LL * n * n);

    // the full requested graph is linear demand, so the baseline accepts it
    auto base = oracle::offline_line_baseline(n, result.sequence, Configuration::identity(n));
    CHECK(base.upfront <= static_cast<long long>(n) * (n - 1) / 2);
    for (long long s : base.serve_costs) CHECK(s == 1);
    CHECK(base.total <= static_cast<long long>(n) * n + static_cast<long long>(result.sequence.size()));
}

TEST_CASE("high distortion forces a far-apart revealed edge") {
    int n = 32;
    sim::NeverSwap on(Configuration::identity(n));
    auto result = adversary_run(n, 0.5, on, 123);
    double worst_c = 1e9;
    for (const auto& ph : result.phases) {
        long long ell = 1LL << ph.batch_level;
        if (ph.distortion_start >= ell * static_cast<long long>(n) * n / 36) {
            CHECK(ph.max_edge_dist >= 1);
            worst_c = std::min(worst_c,
                               static_cast<double>(ph.max_edge_dist) / (static_cast<double>(n) / ell));
        }
    }
    if (worst_c < 1e9) {
        CHECK(worst_c > 0.0);
        MESSAGE("empirical lemma-2 constant c = ", worst_c);
    }

    CHECK_THROWS_AS(adversary_run(12, 0.5, on, 1), UsageError); // not a power of two
}

TEST_CASE("long-sequence mode repeats the construction") {
    int n = 16;
    sim::NeverSwap on(Configuration::identity(n));
    AdversaryOptions opts;
    opts.repeats = 2;
    auto twice = adversary_run(n, 0.5, on, 5, opts);
    sim::NeverSwap on2(Configuration::identity(n));
    auto once = adversary_run(n, 0.5, on2, 5);
    CHECK(twice.phases.size() == 2 * once.phases.size());
    CHECK(twice.sequence.size() >= once.sequence.size());
}
