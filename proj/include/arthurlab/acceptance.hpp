#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arthurlab::acceptance {

struct CheckResult {
    std::string id;       // e.g. "1-kottwitz-table"
    std::string module;   // owning module name
    bool pass = false;
    std::string detail;   // one-line summary or first failure
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 12345;
    bool quick = true;   // the acceptance configuration; !quick enlarges the random batches
    int threads = 1;     // criterion-level parallelism
};

// Runs all acceptance criteria; results are sorted by id and deterministic
// for a fixed (seed, quick).
std::vector<CheckResult> run_all(const Options& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace arthurlab::acceptance
