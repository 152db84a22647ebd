#include <doctest.h>

#include <cmath>

#include "linelab/analysis.hpp"

using namespace linelab;
using namespace linelab::analysis;

TEST_CASE("telephone numbers follow the recurrence") {
    CHECK(telephone(0) == 1);
    CHECK(telephone(1) == 1);
    CHECK(telephone(2) == 2);
    CHECK(telephone(3) == 4);
    CHECK(telephone(4) == 10);
    CHECK(telephone(5) == 26);
    CHECK(telephone(10) == 9496);
    CHECK(telephone(20) == BigInt("23758664096"));
}

TEST_CASE("enumeration agrees with the counting recurrence") {
    for (int k = 0; k <= 9; ++k) {
        auto invs = enumerate_involutions(k);
        CHECK(BigInt(invs.size()) == telephone(k));
        for (const auto& f : invs)
            for (int i = 0; i < k; ++i) REQUIRE(f[f[i]] == i);
    }
    CHECK_THROWS_AS(enumerate_involutions(10), UsageError);
}

TEST_CASE("per-pair multiplicities") {
    for (int k = 2; k <= 6; ++k) {
        auto invs = enumerate_involutions(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                long long cnt = 0;
                for (const auto& f : invs)
                    if (f[i] == j) ++cnt;
                CHECK(BigInt(cnt) == (i == j ? telephone(k - 1) : telephone(k - 2)));
            }
    }
}

TEST_CASE("average involution weight") {
    InvolutionInstance zeros{{0, 0, 0}, {0, 0, 0}};
    CHECK(average_involution_weight(zeros) == 0);

    InvolutionInstance single{{BigRat(3, 2)}, {BigRat(5)}};
    CHECK(average_involution_weight(single) == BigRat(15, 2));

    Rng rng = make_rng(53, "staircase-unit");
    std::uniform_int_distribution<int> val(0, 9);
    for (int k = 2; k <= 8; ++k)
        for (int t = 0; t < 10; ++t) {
            InvolutionInstance inst;
            for (int i = 0; i < k; ++i) {
                inst.x.emplace_back(val(rng));
                inst.y.emplace_back(val(rng));
            }
            BigRat avg = average_involution_weight(inst);
            CHECK(avg >= staircase_constant(k) * inst.sum_x() * inst.sum_y());
        }
}

TEST_CASE("the ratio recurrence stays between the square-root bounds") {
    CHECK(ratio_r(1) == 1.0);
    CHECK(ratio_r(2) == 2.0);

    double r = 1.0;
    for (int n = 1; n <= 10000; ++n) {
        if (n > 1) r = 1.0 + (n - 1) / r;
        CHECK(r >= std::sqrt(static_cast<double>(n)) - 1e-9);
        CHECK(r < 1.0 + std::sqrt(n + 1.0) + 1e-9);
    }

    for (int n = 1; n <= 20; ++n)
        CHECK(ratio_r_exact(n) == BigRat(telephone(n)) / BigRat(telephone(n - 1)));
}

TEST_CASE("staircase constants") {
    CHECK(staircase_constant(2) == BigRat(1, 2));
    CHECK(staircase_constant(4) == BigRat(1, 5));

    // k * T(k-2)/T(k) stays within [1/4, 2]; rolling big integers keep the
    // sweep exact
    BigInt t2 = 1, t1 = 1; // T(k-2), T(k-1)
    BigInt cur = 2;        // T(2)
    for (int k = 2; k <= 10000; ++k) {
        if (k > 2) {
            BigInt next = cur + BigInt(k - 1) * t1;
            t2 = t1;
            t1 = cur;
            cur = next;
        }
        // 1/4 <= k*T(k-2)/T(k) <= 2
        CHECK(4 * k * t2 >= cur);
        CHECK(k * t2 <= 2 * cur);
    }
}
