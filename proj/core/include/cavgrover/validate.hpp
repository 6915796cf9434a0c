#pragma once

#include <string>
#include <vector>

namespace cavgrover {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Built-in invariant suite behind the CLI `validate` mode: closed-form
/// amplitude amplification, the one-pulse Householder reflection, W-state
/// preparation, analytic-vs-integrated propagator equivalence, norm
/// conservation and Bloch-mode orthonormality.
std::vector<CheckResult> run_validation_suite();

} // namespace cavgrover
