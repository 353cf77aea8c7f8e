#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ramify {

struct CheckResult {
    std::string name;
    bool pass = true;
    int64 cases = 0;
    std::string detail;   // first failure, empty on PASS
};

struct SelfCheckReport {
    std::string budget;
    uint64 seed = 0;
    std::vector<CheckResult> checks;
    bool pass = true;
};

// Runs the library's invariant sweeps (ring laws, group laws, the sigma_m
// family, the exhaustive jump-profile equivalences, orbit oracle agreement,
// lift checks) at one of three budgets: "quick", "default", "deep".
// Deterministic for a fixed seed.
SelfCheckReport run_selfcheck(const std::string& budget, uint64 seed);

nlohmann::json to_json(const SelfCheckReport& r);

// strictly increasing jump vectors of length n with entries in [1, max_jump]
std::vector<std::vector<int64>> enumerate_jump_vectors(int n, int64 max_jump);

} // namespace ramify
