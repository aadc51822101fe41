#pragma once

#include <string_view>

#include "regime_lab/model.hpp"

namespace regime_lab {

/// Threshold bundle of the active-policy equilibrium indexed by r_prime.
///
/// Types in [theta_lower, theta_upper] intervene with r_prime and face no
/// attack. Everyone else plays r_lower; agents who see r_lower attack iff
/// their signal is at most x_prime, and that attack vanishes from
/// theta_no_attack upward.
struct SignalingEquilibrium {
    double r_prime = 0.0;
    double theta_lower = 0.0;
    double theta_upper = 0.0;
    double x_prime = 0.0;
    double theta_no_attack = 0.0;
    double r_tilde = 0.0;
};

enum class PolicyRegion { AbandonRegion, InterveneRegion, DefendUnderAttackRegion, NoAttackRegion };

std::string_view to_string(PolicyRegion region) noexcept;

/// Largest sustainable intervention r~ = r_lower + sqrt(2 (1 - r_lower)); c(r~) = 1 - r_lower.
double max_policy(const ModelParams& params);

/// Throws DomainError unless r_lower < r_prime <= r~.
SignalingEquilibrium solve_signaling(const ModelParams& params, double r_prime);

/// r_prime on the closed interval [theta_lower, theta_upper], r_lower elsewhere.
double policy_strategy(const SignalingEquilibrium& eq, const ModelParams& params, double theta);

/// Aggregate attack after the policymaker plays r_lower. Piecewise linear:
/// 1, then slope -1/(2 sigma), then 0 from theta_no_attack on.
double aggregate_attack_no_intervention(const ModelParams& params, const SignalingEquilibrium& eq,
                                        double theta);

/// Policymaker's realized payoff U(theta; r_prime).
double ex_post_welfare(const ModelParams& params, const SignalingEquilibrium& eq, double theta);

PolicyRegion classify_region(const SignalingEquilibrium& eq, double theta);

}  // namespace regime_lab
