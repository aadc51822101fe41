#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace regime_lab {

/// Parameter grid swept by the invariant suite.
struct VerifyGrid {
    std::vector<double> sigmas{0.1, 0.5, 1.0, 2.0, 3.0, 5.0};
    std::vector<double> r_lowers{0.2, 0.5, 0.8};
    std::size_t n_policies = 20;  // continuation r grid on [0, 1]
    std::size_t n_family = 25;    // r_prime values in (r_lower, r~]
};

/// Test-harness hooks. A nonzero theta_upper_perturbation shifts every
/// solved theta_upper before the signalling checks run.
struct VerifyHooks {
    double theta_upper_perturbation = 0.0;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t evaluations = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::vector<std::string> failed() const;
};

/// Evaluates every model invariant over the grid. Failures are reported in
/// the result; nothing is thrown for a failing check. An empty grid yields an
/// empty report.
VerifyReport run_verify(const VerifyGrid& grid = {}, const VerifyHooks& hooks = {});

}  // namespace regime_lab
