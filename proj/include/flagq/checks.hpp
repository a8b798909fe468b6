#pragma once

#include <string>
#include <vector>

namespace flagq::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // counterexample or note on failure
};

// Runs the whole invariant suite at the given n. Deterministic for a fixed
// seed. n = 4 includes the exhaustive oracle-agreement sweep and takes
// correspondingly longer.
std::vector<CheckResult> run_all(int n, unsigned seed = 0x5eed);

} // namespace flagq::checks
