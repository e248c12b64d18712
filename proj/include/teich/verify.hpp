#pragma once

#include <string>
#include <vector>

namespace teich {

struct InvariantResult {
    std::string name;
    bool pass = false;
    std::string detail; // human-readable residual / witness on failure
};

// Fixed manifest of module invariants, evaluated with small deterministic
// inputs. injectFailure flips one expected value (negative-control hook).
std::vector<InvariantResult> runInvariantSuite(bool injectFailure = false);

} // namespace teich
