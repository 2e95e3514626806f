// Deterministic verification harness: each suite sweeps one family of
// algebraic identities (exhaustively or with seeded random trials) and
// reports serialized counterexamples on failure.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ladderlie {

struct SuiteOptions {
    std::uint64_t seed = 1;
    long trials = 1000;   // random-trial suites only
    long max_index = 0;   // 0 = per-suite default
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<std::string> failures;
    long elapsed_ms = 0;

    bool pass() const { return failures.empty(); }
};

// Known suite names, in execution order of "all".
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws std::invalid_argument
// on an unknown name. Deterministic given (seed, trials, max_index).
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts);

std::string report_to_json_line(const SuiteReport& report);

} // namespace ladderlie
