#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fermicell/config.h"

namespace fermicell {

struct CheckResult {
    std::string suite;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyContext {
    int sites = 2;
    std::uint64_t seed = 1;
    std::uint64_t max_dim = 65536;
    Tolerances tol;
};

struct Suite {
    std::string name;    // "<module>.<invariant>"
    std::string module;
    std::string description;
    std::function<CheckResult(const VerifyContext &)> run;
};

/// Every registered invariant suite, in execution order.
const std::vector<Suite> &suite_registry();

/// Names, modules and descriptions of the registry as a JSON array.
json suite_manifest();

/// Runs the named suites (all when `names` is empty). Throws ConfigError for an unknown name.
std::vector<CheckResult> run_suites(const VerifyContext &ctx, const std::vector<std::string> &names = {});

json verify_report(const VerifyContext &ctx, const std::vector<CheckResult> &results);

}  // namespace fermicell
