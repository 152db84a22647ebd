#include "linelab/verify.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "linelab/adversary.hpp"
#include "linelab/analysis.hpp"
#include "linelab/classic.hpp"
#include "linelab/oracle.hpp"
#include "linelab/sim.hpp"

namespace linelab::verify {

namespace {

SuiteResult fail(std::string msg) { return {false, std::move(msg)}; }
SuiteResult pass(std::string msg) { return {true, std::move(msg)}; }

SuiteResult suite_staircase(std::uint64_t seed) {
    using namespace analysis;

    for (int k = 0; k <= 9; ++k)
        if (BigInt(enumerate_involutions(k).size()) != telephone(k))
            return fail("involution count != T(k) at k=" + std::to_string(k));

    for (int k = 2; k <= 7; ++k) {
        auto invs = enumerate_involutions(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                long long cnt = 0;
                for (const auto& f : invs)
                    if (f[i] == j) ++cnt;
                BigInt want = i == j ? telephone(k - 1) : telephone(k - 2);
                if (BigInt(cnt) != want)
                    return fail("pair multiplicity off at k=" + std::to_string(k));
            }
    }

    Rng rng = make_rng(seed, "verify-staircase");
    std::uniform_int_distribution<int> val(0, 9);
    for (int k = 2; k <= 8; ++k)
        for (int t = 0; t < 50; ++t) {
            InvolutionInstance inst;
            for (int i = 0; i < k; ++i) {
                inst.x.emplace_back(val(rng));
                inst.y.emplace_back(val(rng));
            }
            BigRat avg = average_involution_weight(inst);
            BigRat bound = staircase_constant(k) * inst.sum_x() * inst.sum_y();
            if (avg < bound)
                return fail("average weight below T(k-2)/T(k) * x * y at k=" + std::to_string(k));
        }
    return pass("staircase: counts, multiplicities and weight bound (k<=8, 50 instances each)");
}

SuiteResult suite_recurrences(std::uint64_t) {
    using namespace analysis;
    if (telephone(0) != 1 || telephone(1) != 1 || telephone(4) != 10 || telephone(5) != 26)
        return fail("telephone base values wrong");

    double r = 1.0;
    for (int n = 1; n <= 1000000; ++n) {
        if (n > 1) r = 1.0 + (n - 1) / r;
        if (r < std::sqrt(static_cast<double>(n)) - 1e-9)
            return fail("R(n) below sqrt(n) at n=" + std::to_string(n));
        if (r >= 1.0 + std::sqrt(n + 1.0) + 1e-9)
            return fail("R(n) not below 1+sqrt(n+1) at n=" + std::to_string(n));
    }

    for (int n = 1; n <= 20; ++n)
        if (ratio_r_exact(n) != BigRat(telephone(n)) / BigRat(telephone(n - 1)))
            return fail("T(n)/T(n-1) != R(n) at n=" + std::to_string(n));
    return pass("recurrences: sqrt bounds to n=1e6, exact T/R identity to n=20");
}

std::vector<Request> random_path_requests(int n, int m, Rng& rng) {
    std::vector<NodeId> path(n);
    std::iota(path.begin(), path.end(), 0);
    std::shuffle(path.begin(), path.end(), rng);
    std::vector<Request> sigma;
    if (n < 2) return sigma;
    std::uniform_int_distribution<int> edge(0, n - 2);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int i = 0; i < m; ++i) {
        int j = edge(rng);
        Request r{path[j], path[j + 1]};
        if (flip(rng)) std::swap(r.u, r.v);
        sigma.push_back(r);
    }
    return sigma;
}

SuiteResult suite_oracle_dominance(std::uint64_t seed) {
    Rng rng = make_rng(seed, "verify-oracle");
    for (int i = 0; i < 500; ++i) {
        int n = 2 + i % 4;
        int m = i % 7;
        auto sigma = random_path_requests(n, m, rng);
        Configuration initial = Configuration::random(n, rng);

        oracle::OracleInstance inst{n, sigma, initial};
        auto opt = oracle::optimal_offline(inst);
        if (oracle::replay_witness(inst, opt) != opt.cost)
            return fail("witness replay mismatch at instance " + std::to_string(i));

        sim::GreadAlgorithm g(initial);
        for (Request r : sigma) g.on_request(r);
        long long gcost = g.ledger().serving + g.ledger().migration;

        sim::NeverSwap ns(initial);
        for (Request r : sigma) ns.on_request(r);
        long long nscost = ns.ledger().serving;

        long long base = oracle::offline_line_baseline(n, sigma, initial).total;

        if (!(opt.cost <= gcost && gcost <= base && opt.cost <= nscost))
            return fail("dominance chain broken at instance " + std::to_string(i) + ": opt=" +
                        std::to_string(opt.cost) + " gread=" + std::to_string(gcost) +
                        " baseline=" + std::to_string(base) + " neverswap=" +
                        std::to_string(nscost));
    }
    return pass("oracle dominance and witness replay over 500 instances");
}

SuiteResult suite_mtf4(std::uint64_t seed) {
    Rng rng = make_rng(seed, "verify-mtf4");
    for (int i = 0; i < 500; ++i) {
        int n = 2 + i % 3;
        int m = 1 + i % 6;
        std::uniform_int_distribution<int> elem(0, n - 1);
        std::vector<int> tau(m);
        for (int& e : tau) e = elem(rng);

        classic::ClassicList list(n);
        long long mtf_cost = 0;
        for (int e : tau) mtf_cost += classic::mtf_serve(list, e);

        long long opt = classic::optimal_list_update(n, tau);
        if (mtf_cost > 4 * opt)
            return fail("MTF exceeded 4*OPT at instance " + std::to_string(i) + " (" +
                        std::to_string(mtf_cost) + " > 4*" + std::to_string(opt) + ")");
    }
    return pass("MTF within 4*OPT over 500 instances");
}

SuiteResult suite_lemma3(std::uint64_t seed) {
    Rng rng = make_rng(seed, "verify-lemma3");
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + i % 9;
        Configuration c = Configuration::random(n, rng);
        RequestGraph g(n);
        std::vector<NodeId> path(n);
        std::iota(path.begin(), path.end(), 0);
        std::shuffle(path.begin(), path.end(), rng);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int j = 0; j + 1 < n; ++j)
            if (coin(rng)) g.add_edge({path[j], path[j + 1]});

        std::uniform_int_distribution<int> pos(1, n - 1);
        long long delta = adversary::swap_distortion_delta(c, g, pos(rng));
        if (std::abs(delta) > 2LL * g.largest_component_size())
            return fail("distortion delta beyond 2l at instance " + std::to_string(i));
    }
    return pass("adjacent swaps move distortion by at most 2l over 1000 instances");
}

SuiteResult suite_distributed_equivalence(std::uint64_t seed) {
    const int sizes[] = {4, 8, 16, 32, 64};
    for (int i = 0; i < 100; ++i) {
        int n = sizes[i % 5];
        int m = 4 * n;
        auto sigma = sim::random_line_demand(n, m, stream_seed(seed, "verify-dist") + i);

        sim::GreadAlgorithm central(Configuration::identity(n));
        dist::DistributedGread distributed(n, seed + i);
        for (Request r : sigma) {
            central.on_request(r);
            distributed.request(r);
        }

        if (distributed.config() != central.config())
            return fail("final configurations differ at run " + std::to_string(i));
        if (distributed.ledger().migration != central.ledger().migration ||
            distributed.ledger().serving != central.ledger().serving)
            return fail("serving/swap ledgers differ at run " + std::to_string(i));

        for (const auto& rs : distributed.routes()) {
            if (rs.first && rs.hops > 12 * rs.line_distance)
                return fail("first route exceeded 12*i at run " + std::to_string(i));
            if (!rs.first && rs.hops != 1)
                return fail("repeat route not a single hop at run " + std::to_string(i));
        }

        // end-bit and size soundness at quiescence
        const RequestGraph& g = distributed.graph();
        for (NodeId v = 0; v < n; ++v) {
            bool is_end = g.degree(v) < 2;
            if (distributed.node(v).end_bit != is_end)
                return fail("end bit wrong at node " + std::to_string(v));
            if (is_end) {
                long long size = static_cast<long long>(
                    g.component_path(g.component_of(v)).size());
                if (distributed.node(v).list_size != size)
                    return fail("list size wrong at node " + std::to_string(v));
            }
        }
    }
    return pass("distributed run matches centralized over 100 sequences; route bounds hold");
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "staircase", "recurrences", "oracle-dominance", "mtf4", "lemma3",
        "distributed-equivalence"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    try {
        if (name == "staircase") return suite_staircase(seed);
        if (name == "recurrences") return suite_recurrences(seed);
        if (name == "oracle-dominance") return suite_oracle_dominance(seed);
        if (name == "mtf4") return suite_mtf4(seed);
        if (name == "lemma3") return suite_lemma3(seed);
        if (name == "distributed-equivalence") return suite_distributed_equivalence(seed);
    } catch (const PropertyViolation& e) {
        return fail(std::string("property violation: ") + e.what());
    }
    throw UsageError("unknown suite: " + name);
}

} // namespace linelab::verify
