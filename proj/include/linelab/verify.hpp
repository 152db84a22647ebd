#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linelab::verify {

struct SuiteResult {
    bool pass = false;
    std::string detail;
};

// Named property suites with fixed per-suite random streams:
// staircase, recurrences, oracle-dominance, mtf4, lemma3,
// distributed-equivalence.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

const std::vector<std::string>& suite_names();

} // namespace linelab::verify
