#pragma once

// Batch front end shared by the CLI and the tests: a validated run
// configuration goes in, a deterministic report and an exit code come out.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

inline constexpr const char* kToolName = "stickel";
inline constexpr const char* kToolVersion = "0.1.0";

// Bernoulli tables are exact rationals; keep scans at desk scale.
inline constexpr u64 kMaxScanPrime = 1000;
inline constexpr std::size_t kMaxProbeBound = 10'000'000;

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBadInput = 2 };

struct RunConfig {
    // scan-irregular | bernoulli | stickelberger show | gauss verify |
    // principality test | principality corollary | principality probe
    std::string command;
    u64 p = 0;
    u64 pmin = 3;
    u64 pmax = 0;
    std::vector<u64> q;
    std::optional<u64> v;  // primitive root; smallest if absent
    int jobs = 0;          // not echoed: output must not depend on it
    std::string format;    // json | tsv; empty selects the command default
    unsigned hensel_cap = 0;
    unsigned valuation_cap = 0;
    std::size_t probe_bound = 10000;
    int coeff_bound = 2;
};

// Runs the command, writes the report to out and diagnostics to err.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace stickel
