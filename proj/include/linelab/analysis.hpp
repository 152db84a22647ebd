#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linelab/core.hpp"

namespace linelab::analysis {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// T(k) = T(k-1) + (k-1) T(k-2), T(0) = T(1) = 1: the number of involutions
// on k elements.
BigInt telephone(int k);

// All involutions on {0..k-1}, each as the image vector f with f[f[i]] == i.
// Guarded at k <= 9 (T(9) = 2620).
std::vector<std::vector<int>> enumerate_involutions(int k);

// Paired nonnegative sequences; the weight of an involution f over the
// indices is sum_i x[i] * y[f(i)].
struct InvolutionInstance {
    std::vector<BigRat> x;
    std::vector<BigRat> y;

    int k() const { return static_cast<int>(x.size()); }
    BigRat sum_x() const;
    BigRat sum_y() const;
};

BigRat involution_weight(const InvolutionInstance& inst, const std::vector<int>& f);

// Exact mean of the weight over all T(k) involutions; k <= 9.
BigRat average_involution_weight(const InvolutionInstance& inst);

// R(n) = 1 + (n-1)/R(n-1), R(1) = 1, by forward recurrence in doubles.
double ratio_r(int n);

// Same recurrence in exact rationals; intended for small n (the values are
// ratios of telephone numbers and grow fast).
BigRat ratio_r_exact(int n);

// T(k-2)/T(k) as an exact rational, k >= 2. Checks the closed-form lower
// bound 1/((1+sqrt(k+1))(1+sqrt(k-1))) before returning.
BigRat staircase_constant(int k);

} // namespace linelab::analysis
