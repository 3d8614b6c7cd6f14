#pragma once

#include <string>
#include <vector>

namespace okbody::checks {

/// Outcome of one named consistency check.
struct CheckResult {
    std::string tier;
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success; the first mismatch otherwise
};

/// The four check tiers, in execution order: "kernel" (geometry and
/// piecewise-linear engine properties), "surfaces" (sweep oracles and cone
/// derivations), "threefolds" (family volumes, nefness, slices, bounds),
/// "paper" (golden values of the shipped families).
std::vector<std::string> tiers();

/// Names registered under one tier; "all" lists the full suite in order.
std::vector<std::string> check_names(const std::string& tier = "all");

/// Runs every check of the tier ("all" runs the full suite) in registration
/// order. All randomness is locally seeded, so results are deterministic.
std::vector<CheckResult> run(const std::string& tier = "all");

/// Runs a single check by name; throws std::invalid_argument when unknown.
CheckResult run_one(const std::string& name);

bool all_passed(const std::vector<CheckResult>& results);

/// One "PASS tier/name" or "FAIL tier/name: detail" line per result, then a
/// pass/fail tally.
std::string report(const std::vector<CheckResult>& results);

}  // namespace okbody::checks
