#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace projperm {

/**
 * Outcome of one self-check suite.  `checks` counts individual assertions;
 * `failures` holds descriptions of the first few that did not hold (the
 * total failed count is `failed`).
 */
struct SuiteResult {
    std::string name;
    bool passed = false;
    std::uint64_t checks = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> failures;
};

/// Names of every available suite, in canonical run order.
std::vector<std::string> suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name);

/// Runs every suite.
std::vector<SuiteResult> run_all_suites();

} // namespace projperm
