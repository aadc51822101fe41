#pragma once

#include <cstddef>
#include <vector>

#include "regime_lab/model.hpp"

namespace regime_lab {

/// Thresholds of the continuation game with a publicly observed policy r.
/// Agents attack iff x <= x_cutoff; the regime falls iff theta <= theta_cutoff.
struct ContinuationEquilibrium {
    double r = 0.0;
    double x_cutoff = 0.0;
    double theta_cutoff = 0.0;
};

struct SolverConfig {
    double tol = 1e-9;
    std::size_t max_iter = 10'000;
};

/// Cutoff sequences produced by iterated elimination of conditionally
/// dominated strategies. upper_seq starts where everyone attacks, lower_seq
/// where nobody does.
struct DominanceTrace {
    std::vector<double> upper_seq;
    std::vector<double> lower_seq;
    bool converged = false;
    /// Lipschitz bound 1/(1+2 sigma) of the best-response map on its interior.
    double contraction_modulus = 0.0;
};

/// x~(r) = (1 + 2 sigma)(1 - r) - sigma, theta~(r) = 1 - r, for r in [0, 1].
ContinuationEquilibrium closed_form_thresholds(const ModelParams& params, double r);

/// Share of agents with signal <= x_cutoff when the state is theta:
/// clamp((x_cutoff - theta + sigma) / (2 sigma), 0, 1).
double attack_mass(const ModelParams& params, double x_cutoff, double theta);

/// Posterior probability that theta <= theta_cutoff after observing x.
double success_prob_given_signal(const ModelParams& params, double theta_cutoff, double x);

/// Solution of attack_mass(x_cutoff, theta) = theta, clamped to [0, 1].
double regime_fall_threshold(const ModelParams& params, double x_cutoff);

/// Signal of the agent who is indifferent when everyone else uses cutoff x_hat.
double best_response_cutoff(const ModelParams& params, double r, double x_hat);

struct DominanceResult {
    ContinuationEquilibrium equilibrium;
    DominanceTrace trace;
};

/// Iterates best_response_cutoff from both extreme cutoffs until the two
/// sequences meet within config.tol. Throws ConvergenceError on budget exhaustion.
DominanceResult solve_iterated_dominance(const ModelParams& params, double r,
                                         const SolverConfig& config = {});

/// Policymaker's realized payoff when r is exogenous and public:
/// -c(r) if theta <= theta~(r), else theta - A(theta; x~(r)) - c(r).
double continuation_welfare(const ModelParams& params, double r, double theta);

}  // namespace regime_lab
