#include "regime_lab/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regime_lab/errors.hpp"

namespace regime_lab {
namespace {

void require_unit_policy(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("policy r must lie in [0,1]");
}

}  // namespace

ContinuationEquilibrium closed_form_thresholds(const ModelParams& params, double r) {
    require_unit_policy(r);
    const double s = params.sigma();
    return {r, (1.0 + 2.0 * s) * (1.0 - r) - s, 1.0 - r};
}

double attack_mass(const ModelParams& params, double x_cutoff, double theta) {
    const double s = params.sigma();
    return std::clamp((x_cutoff - theta + s) / (2.0 * s), 0.0, 1.0);
}

double success_prob_given_signal(const ModelParams& params, double theta_cutoff, double x) {
    const double s = params.sigma();
    return std::clamp((theta_cutoff - x + s) / (2.0 * s), 0.0, 1.0);
}

double regime_fall_threshold(const ModelParams& params, double x_cutoff) {
    const double s = params.sigma();
    return std::clamp((x_cutoff + s) / (1.0 + 2.0 * s), 0.0, 1.0);
}

double best_response_cutoff(const ModelParams& params, double r, double x_hat) {
    require_unit_policy(r);
    // Posterior is U[x - sigma, x + sigma]; indifference means Pr{theta <= theta*} = r.
    return regime_fall_threshold(params, x_hat) + params.sigma() * (1.0 - 2.0 * r);
}

DominanceResult solve_iterated_dominance(const ModelParams& params, double r,
                                         const SolverConfig& config) {
    require_unit_policy(r);
    if (!(config.tol > 0.0)) throw DomainError("solver tol must be positive");
    if (config.max_iter < 1) throw DomainError("solver max_iter must be at least 1");

    const double s = params.sigma();
    DominanceResult out;
    DominanceTrace& trace = out.trace;
    trace.contraction_modulus = 1.0 / (1.0 + 2.0 * s);

    // Both starts lie strictly inside the dominance regions.
    double upper = 1.0 + s + 1.0;
    double lower = -s - 1.0;
    trace.upper_seq.push_back(upper);
    trace.lower_seq.push_back(lower);

    for (std::size_t k = 0; k < config.max_iter; ++k) {
        upper = best_response_cutoff(params, r, upper);
        lower = best_response_cutoff(params, r, lower);
        trace.upper_seq.push_back(upper);
        trace.lower_seq.push_back(lower);
        if (upper - lower <= config.tol) {
            trace.converged = true;
            break;
        }
    }
    if (!trace.converged) {
        throw ConvergenceError("iterated dominance did not converge within " +
                               std::to_string(config.max_iter) + " iterations");
    }

    const double x = 0.5 * (upper + lower);
    out.equilibrium = {r, x, regime_fall_threshold(params, x)};
    return out;
}

double continuation_welfare(const ModelParams& params, double r, double theta) {
    const ContinuationEquilibrium eq = closed_form_thresholds(params, r);
    const double c = cost(params, r);
    if (theta <= eq.theta_cutoff) return -c;
    return theta - attack_mass(params, eq.x_cutoff, theta) - c;
}

}  // namespace regime_lab
