#pragma once

#include <optional>
#include <vector>

#include "linelab/core.hpp"

namespace linelab::adversary {

struct DistortionReport {
    long long total = 0;                  // sum of distances over all same-component pairs
    std::optional<Request> max_edge;      // revealed edge at maximum distance, normalized u < v
    long long max_edge_distance = 0;
};

DistortionReport distortion(const Configuration& c, const RequestGraph& g);

// Left / centre / right split of the line positions. X covers the first
// ceil(n/3) positions; Y starts at floor(2n/3) but never closer than two
// past X, so the centre is always nonempty and every X-Y pair is at least
// |C| apart.
struct Partition {
    std::vector<Position> x;
    std::vector<Position> c;
    std::vector<Position> y;
    Position x_end = 0;   // X = 1..x_end
    Position y_begin = 0; // Y = y_begin..n
};

Partition partition_xy(const Configuration& c);

struct AdversaryState {
    RequestGraph graph; // edges revealed so far
    int batch_level = 0; // sublists have size 2^batch_level
    double epsilon = 0.5;
    Rng rng;
    long long last_batch_distortion = 0;

    AdversaryState(int n, double eps, std::uint64_t seed)
        : graph(n), epsilon(eps), rng(stream_seed(seed, "adversary")) {}
};

// Pairs up the current components with a fixed-point-free involution chosen
// to (approximately) maximize sum h_X(L_i) * h_Y(L_f(i)) against the given
// configuration, and commits one endpoint-to-endpoint edge per pair. The
// component count halves.
std::vector<Request> reveal_batch(AdversaryState& st, const Configuration& h, int samples = 32);

// d_{h'}(E) - d_h(E) for h' = h with positions p, p+1 swapped. Magnitude is
// checked against twice the largest component size.
long long swap_distortion_delta(const Configuration& c, const RequestGraph& g, Position p);

struct PhaseRecord {
    int n = 0;
    double epsilon = 0;
    int batch_level = 0;
    long long phase_requests = 0;
    long long phase_on_cost = 0; // serving + migration charged to ON this phase
    long long distortion_start = 0;
    long long distortion_end = 0;
    long long max_edge_dist = 0; // at phase start
};

struct AdversaryOptions {
    double halve_threshold = 0.5; // phase ends when distortion falls below this fraction
    int pairing_samples = 32;
    int repeats = 1; // long-sequence mode: rebuild the construction this many times
};

struct AdversaryResult {
    std::vector<Request> sequence;
    std::vector<PhaseRecord> phases;
};

// Alternates batches with repeated max-distortion requests: each phase runs
// until l*n requests were issued or the measured distortion fell below half
// its value at the batch reveal. Stops once sublists reach size
// 2^ceil(epsilon * log2 n).
AdversaryResult adversary_run(int n, double epsilon, OnlineAlgorithm& on, std::uint64_t seed,
                              const AdversaryOptions& opts = {});

} // namespace linelab::adversary
