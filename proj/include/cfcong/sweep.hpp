#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfcong/congruence.hpp"

namespace cfcong {

// Check-selection bitmask.
namespace checks {
inline constexpr unsigned kTheorem = 1u << 0;
inline constexpr unsigned kConjectures = 1u << 1;
inline constexpr unsigned kIdentities = 1u << 2;
inline constexpr unsigned kProofChain = 1u << 3;
inline constexpr unsigned kAll = kTheorem | kConjectures | kIdentities | kProofChain;
} // namespace checks

struct SweepConfig {
    i64 max_b = 2;
    unsigned selected = checks::kAll;
    int workers = 1;
    std::string csv_path;            // empty: no CSV
    std::optional<u64> seed;         // randomized large-b identity spot-checks
    i64 naive_bound = 500;           // naive/fast comparison only below this b
    i64 spot_check_count = 1000;
    i64 spot_check_max_b = 1000000;
};

struct CaseTally {
    u64 applicable = 0;
    u64 violations = 0;
};

struct SweepSummary {
    u64 pairs_checked = 0;
    std::array<CaseTally, kCaseCount> cases{}; // indexed by CaseId
    u64 identity_violations = 0;
    u64 proof_chain_violations = 0;
    std::vector<std::pair<i64, i64>> violating_pairs;           // (a, b), bugs
    std::vector<std::pair<i64, i64>> conjecture_counterexamples; // (a, b), findings
    u64 spot_checks_run = 0;
    u64 spot_check_failures = 0;
    double elapsed_seconds = 0;

    bool clean() const {
        return violating_pairs.empty() && conjecture_counterexamples.empty() &&
               spot_check_failures == 0;
    }
};

/// Iterates every coprime pair (a, b) with 0 < a < b <= max_b, runs the
/// selected checks, and merges worker results deterministically in (b, a)
/// order. Writes the CSV report when csv_path is set; the bytes do not
/// depend on the worker count.
SweepSummary run_sweep(const SweepConfig& config);

/// One flat CSV row per pair, matching the sweep's report schema.
std::string csv_header();
std::string csv_row(const CheckRecord& rec);

} // namespace cfcong
