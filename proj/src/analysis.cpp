#include "linelab/analysis.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace linelab::analysis {

BigInt telephone(int k) {
    if (k < 0) throw UsageError("telephone: k must be nonnegative");
    BigInt prev2 = 1, prev1 = 1; // T(0), T(1)
    if (k == 0 || k == 1) return 1;
    BigInt cur = 0;
    for (int i = 2; i <= k; ++i) {
        cur = prev1 + BigInt(i - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

namespace {

void enumerate_rec(std::vector<int>& f, int k, std::vector<std::vector<int>>& out) {
    int i = 0;
    while (i < k && f[i] != -1) ++i;
    if (i == k) {
        out.push_back(f);
        return;
    }
    // i stays fixed
    f[i] = i;
    enumerate_rec(f, k, out);
    f[i] = -1;
    // or i pairs with some larger unused j
    for (int j = i + 1; j < k; ++j) {
        if (f[j] != -1) continue;
        f[i] = j;
        f[j] = i;
        enumerate_rec(f, k, out);
        f[i] = -1;
        f[j] = -1;
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_involutions(int k) {
    if (k < 0 || k > 9) throw UsageError("enumerate_involutions: k must be in [0, 9]");
    std::vector<std::vector<int>> out;
    std::vector<int> f(k, -1);
    enumerate_rec(f, k, out);
    return out;
}

BigRat InvolutionInstance::sum_x() const {
    BigRat s = 0;
    for (const auto& xi : x) s += xi;
    return s;
}

BigRat InvolutionInstance::sum_y() const {
    BigRat s = 0;
    for (const auto& yi : y) s += yi;
    return s;
}

BigRat involution_weight(const InvolutionInstance& inst, const std::vector<int>& f) {
    if (inst.x.size() != inst.y.size() || f.size() != inst.x.size())
        throw UsageError("involution_weight: length mismatch");
    BigRat w = 0;
    for (int i = 0; i < inst.k(); ++i) {
        if (inst.x[i] < 0 || inst.y[i] < 0) throw UsageError("entries must be nonnegative");
        w += inst.x[i] * inst.y[f[i]];
    }
    return w;
}

BigRat average_involution_weight(const InvolutionInstance& inst) {
    if (inst.x.size() != inst.y.size()) throw UsageError("x and y must have equal length");
    int k = inst.k();
    if (k < 1 || k > 9) throw UsageError("average_involution_weight: k must be in [1, 9]");
    auto invs = enumerate_involutions(k);
    BigRat total = 0;
    for (const auto& f : invs) total += involution_weight(inst, f);
    return total / BigInt(invs.size());
}

double ratio_r(int n) {
    if (n < 1) throw UsageError("ratio_r: n must be >= 1");
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r = 1.0 + (i - 1) / r;
    return r;
}

BigRat ratio_r_exact(int n) {
    if (n < 1) throw UsageError("ratio_r_exact: n must be >= 1");
    BigRat r = 1;
    for (int i = 2; i <= n; ++i) r = 1 + BigRat(i - 1) / r;
    return r;
}

BigRat staircase_constant(int k) {
    if (k < 2) throw UsageError("staircase_constant: k must be >= 2");
    BigRat c = BigRat(telephone(k - 2)) / BigRat(telephone(k));
    // the telephone numbers overflow double quickly, so the closed-form
    // lower bound is checked in wide floats
    using Wide = boost::multiprecision::cpp_bin_float_100;
    Wide cw(c);
    Wide lower = 1 / ((1 + sqrt(Wide(k + 1))) * (1 + sqrt(Wide(k - 1))));
    if (cw < lower)
        throw PropertyViolation("staircase_constant: bound violated at k=" + std::to_string(k));
    return c;
}

} // namespace linelab::analysis
