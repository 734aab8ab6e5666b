#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace tim::validation {

struct Check {
    int criterion = 0;
    std::string name;
    bool passed = true;
    bool informational = false;  ///< reported, never fails the suite
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
};

/// The ten acceptance criteria, in order.
const std::vector<Criterion>& criteria();

struct SuiteOptions {
    std::set<int> only;            ///< empty: every criterion
    double tolerance_scale = 1.0;  ///< multiplies every numeric tolerance
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::filesystem::path scratch;  ///< for the determinism runs; temp dir if empty
    std::function<void(const Check&)> on_check;
};

std::vector<Check> run_suite(const SuiteOptions& opts);

/// True when no non-informational check of `criterion` (0: any) failed.
bool passed(const std::vector<Check>& checks, int criterion = 0);

}  // namespace tim::validation
