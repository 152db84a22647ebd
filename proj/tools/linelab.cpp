#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linelab/classic.hpp"
#include "linelab/experiments.hpp"
#include "linelab/sim.hpp"
#include "linelab/verify.hpp"

namespace {

using namespace linelab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitProperty = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LINELAB_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw UsageError("LINELAB_SEED must be an unsigned integer");
    }
    return 1;
}

std::vector<Request> read_request_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::vector<Request> sigma;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        Request r;
        if (!(ss >> r.u >> r.v)) throw UsageError("bad request line: " + line);
        sigma.push_back(r);
    }
    return sigma;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw UsageError("cannot open output file: " + path);
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

void write_trace(std::ostream& os, const sim::RunResult& run) {
    os << "step,src,dst,serve_cost,swaps_this_step,cum_serve,cum_swaps,components\n";
    for (const auto& row : run.trace)
        os << row.step << ',' << row.src << ',' << row.dst << ',' << row.serve_cost << ','
           << row.swaps_this_step << ',' << row.cum_serve << ',' << row.cum_swaps << ','
           << row.components << '\n';
}

void write_summary(std::ostream& os, const sim::RunResult& run) {
    os << "requests,total_serve,total_swaps,total_msgs,components\n"
       << run.trace.size() << ',' << run.total_serving << ',' << run.total_swaps << ','
       << run.total_messages << ',' << run.components << '\n';
}

void write_phases(const std::string& path, const std::vector<adversary::PhaseRecord>& phases) {
    if (path.empty()) return;
    Output out(path);
    out.out() << "n,epsilon,batch_level,phase_requests,phase_on_cost,distortion_start,"
                 "distortion_end,max_edge_dist\n";
    for (const auto& p : phases)
        out.out() << p.n << ',' << p.epsilon << ',' << p.batch_level << ',' << p.phase_requests
                  << ',' << p.phase_on_cost << ',' << p.distortion_start << ','
                  << p.distortion_end << ',' << p.max_edge_dist << '\n';
}

void write_merges(const std::string& path, const std::vector<gread::MergeRecord>& merges) {
    if (path.empty()) return;
    Output out(path);
    out.out() << "merge_step,size_small,size_large,swaps,bound_n_min\n";
    for (const auto& m : merges)
        out.out() << m.step << ',' << m.size_small << ',' << m.size_large << ',' << m.swaps
                  << ',' << m.bound_n_min << '\n';
}

void write_messages(const std::string& path, const std::vector<dist::MessageRecord>& records) {
    if (path.empty()) return;
    Output out(path);
    out.out() << "time,kind,from,to,payload\n";
    for (const auto& r : records)
        out.out() << r.time << ',' << dist::msg_kind_name(r.kind) << ',' << r.from << ','
                  << r.to << ',' << r.payload << '\n';
}

struct SimulateArgs {
    std::string alg = "gread";
    std::string gen = "random-line-demand";
    int n = 16;
    int m = 100;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double epsilon = 0.5;
    std::string input;
    std::string out;
    std::string format = "csv";
    std::string phases_out;
    std::string merges_out;
    std::string msgs_out;
};

int cmd_simulate(const SimulateArgs& a) {
    std::uint64_t seed = a.seed_set ? a.seed : default_seed();
    if (a.format != "csv") throw UsageError("unsupported format: " + a.format);

    std::vector<adversary::PhaseRecord> phases;
    sim::RunResult run;
    std::unique_ptr<OnlineAlgorithm> alg;

    if (a.gen == "adversary") {
        if (a.alg == "offline-baseline")
            throw UsageError("the adversary needs an online player; "
                             "use the ratio command for baseline rows");
        alg = sim::make_algorithm(a.alg, a.n, seed);
        auto res = adversary::adversary_run(a.n, a.epsilon, *alg, seed);
        phases = res.phases;
        // replay is already done; rebuild the trace rows from a fresh run
        auto replay = sim::make_algorithm(a.alg, a.n, seed);
        run = sim::run_trace(*replay, res.sequence);
    } else {
        std::vector<Request> sigma;
        if (a.gen == "random-line-demand") {
            sigma = sim::random_line_demand(a.n, a.m, seed);
        } else if (a.gen == "star") {
            sigma = classic::star_sequence(a.n, a.m);
        } else if (a.gen == "file") {
            if (a.input.empty()) throw UsageError("--gen file requires --input");
            sigma = read_request_file(a.input);
        } else {
            throw UsageError("unknown generator: " + a.gen);
        }

        int n = a.n;
        if (a.gen == "file") {
            n = 0;
            for (Request r : sigma) n = std::max({n, r.u + 1, r.v + 1});
            if (n < 2) throw UsageError("input sequence needs at least two nodes");
        }

        if (a.alg == "offline-baseline") {
            auto base = oracle::offline_line_baseline(n, sigma, Configuration::identity(n));
            Output out(a.out);
            out.out() << "requests,upfront_swaps,total\n"
                      << sigma.size() << ',' << base.upfront << ',' << base.total << '\n';
            return kExitOk;
        }

        alg = sim::make_algorithm(a.alg, n, seed);
        run = sim::run_trace(*alg, sigma);
    }

    Output out(a.out);
    write_trace(out.out(), run);
    if (a.out.empty()) write_summary(std::cerr, run);
    else write_summary(std::cout, run);

    write_phases(a.phases_out, phases);
    if (auto* g = dynamic_cast<sim::GreadAlgorithm*>(alg.get()))
        write_merges(a.merges_out, g->state().merges());
    if (auto* d = dynamic_cast<sim::DistributedGreadAlgorithm*>(alg.get()))
        write_messages(a.msgs_out, d->sim().trace);
    return kExitOk;
}

struct RatioArgs {
    std::vector<int> ns;
    std::vector<std::string> algs;
    double epsilon = 0.5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    std::string phases_out;
};

int cmd_ratio(const RatioArgs& a) {
    std::uint64_t seed = a.seed_set ? a.seed : default_seed();
    for (int n : a.ns)
        if (n < 16 || (n & (n - 1)) != 0)
            throw UsageError("ratio: every n must be a power of two >= 16");

    std::vector<adversary::PhaseRecord> all_phases;
    Output out(a.out);
    out.out() << "n,alg,on_cost,off_cost,ratio,len\n";
    for (int n : a.ns)
        for (const auto& alg : a.algs) {
            std::vector<adversary::PhaseRecord> phases;
            auto row = experiments::ratio_point(n, alg, a.epsilon, seed, &phases);
            all_phases.insert(all_phases.end(), phases.begin(), phases.end());
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.4f", row.ratio);
            out.out() << row.n << ',' << row.alg << ',' << row.on_cost << ',' << row.off_cost
                      << ',' << buf << ',' << row.len << '\n';
        }
    write_phases(a.phases_out, all_phases);
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool seed_set) {
    std::uint64_t s = seed_set ? seed : default_seed();
    std::vector<std::string> names;
    if (suite == "all") names = verify::suite_names();
    else names.push_back(suite);

    bool ok = true;
    for (const auto& name : names) {
        auto res = verify::run_suite(name, s);
        std::cout << (res.pass ? "PASS" : "FAIL") << "  " << name << ": " << res.detail << '\n';
        ok = ok && res.pass;
    }
    return ok ? kExitOk : kExitProperty;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linelab: self-adjusting linear network simulations"};
    app.require_subcommand(1);

    SimulateArgs sa;
    auto* sim_cmd = app.add_subcommand("simulate", "run one algorithm against a generator");
    sim_cmd->add_option("--alg", sa.alg,
                        "gread | never-swap | offline-baseline | distributed-gread");
    sim_cmd->add_option("--gen", sa.gen, "random-line-demand | star | adversary | file");
    sim_cmd->add_option("--n", sa.n, "number of nodes");
    sim_cmd->add_option("--m", sa.m, "number of requests");
    auto* sim_seed = sim_cmd->add_option("--seed", sa.seed, "master seed");
    sim_cmd->add_option("--epsilon", sa.epsilon, "adversary batch depth in (0,1]");
    sim_cmd->add_option("--input", sa.input, "request file, one 'u v' pair per line");
    sim_cmd->add_option("--out", sa.out, "trace CSV path (default stdout)");
    sim_cmd->add_option("--format", sa.format, "csv");
    sim_cmd->add_option("--phases-out", sa.phases_out, "adversary phase CSV");
    sim_cmd->add_option("--merges-out", sa.merges_out, "per-merge CSV (gread)");
    sim_cmd->add_option("--msgs-out", sa.msgs_out, "message trace CSV (distributed)");

    RatioArgs ra;
    auto* ratio_cmd = app.add_subcommand("ratio", "competitive-ratio table via the adversary");
    ratio_cmd->add_option("--n", ra.ns, "node counts (powers of two)")->delimiter(',');
    ratio_cmd->add_option("--alg", ra.algs, "algorithms")->delimiter(',');
    ratio_cmd->add_option("--epsilon", ra.epsilon, "adversary batch depth");
    auto* ratio_seed = ratio_cmd->add_option("--seed", ra.seed, "master seed");
    ratio_cmd->add_option("--out", ra.out, "output CSV path");
    ratio_cmd->add_option("--phases-out", ra.phases_out, "phase CSV");

    std::string suite;
    std::uint64_t vseed = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
    verify_cmd->add_option("suite", suite,
                           "staircase | recurrences | oracle-dominance | mtf4 | lemma3 | "
                           "distributed-equivalence | all")
        ->required();
    auto* verify_seed = verify_cmd->add_option("--seed", vseed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        sa.seed_set = sim_seed->count() > 0;
        ra.seed_set = ratio_seed->count() > 0;
        if (sim_cmd->parsed()) return cmd_simulate(sa);
        if (ratio_cmd->parsed()) return cmd_ratio(ra);
        if (verify_cmd->parsed()) return cmd_verify(suite, vseed, verify_seed->count() > 0);
    } catch (const NonlinearDemandError& e) {
        std::cerr << "input validation: " << e.what() << '\n';
        return kExitInput;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << '\n';
        return kExitProperty;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
