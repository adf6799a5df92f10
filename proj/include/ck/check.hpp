#pragma once

#include "ck/labels.hpp"

#include <string>
#include <vector>

namespace ck {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Sign-pattern samples used throughout the suites: all ones, one -1, one 0.
// The varied slot is the second coefficient (the only one when N = 1).
OmegaVector omega_all_ones(int N);
OmegaVector omega_one_minus(int N);
OmegaVector omega_one_zero(int N);

// Runs the module invariant suites for all sites with N up to `depth`.
std::vector<CheckResult> run_checks(int depth);

} // namespace ck
