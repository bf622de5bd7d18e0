#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vdc::verify {

enum class Profile { quick, full };

struct CheckResult {
    std::string id;
    int criterion = 0;  // 1..16, or 0 for auxiliary checks
    std::string expected, actual;
    bool pass = false;
    double seconds = 0;
};

struct Options {
    Profile profile = Profile::quick;
    std::ostream* progress = nullptr;  // per-check lines as they finish
};

/// Runs the reproduction suite for the published constants. The quick
/// profile runs a strict subset of the full profile's checks.
std::vector<CheckResult> run(const Options& opts);

bool all_pass(const std::vector<CheckResult>& results);

/// One "PASS/FAIL criterion N" line per criterion, aggregated.
std::string criterion_summary(const std::vector<CheckResult>& results);

std::string to_json(const std::vector<CheckResult>& results);

}  // namespace vdc::verify
