#include "regime_lab/signaling.hpp"

#include <algorithm>
#include <cmath>

#include "regime_lab/errors.hpp"

namespace regime_lab {
namespace {

// Slope of theta_no_attack in theta_lower: 1 - 2 sigma r_lower / (1 - r_lower).
double no_attack_slope(const ModelParams& params) {
    const double rl = params.r_lower();
    return 1.0 - 2.0 * params.sigma() * rl / (1.0 - rl);
}

}  // namespace

std::string_view to_string(PolicyRegion region) noexcept {
    switch (region) {
        case PolicyRegion::AbandonRegion: return "abandon";
        case PolicyRegion::InterveneRegion: return "intervene";
        case PolicyRegion::DefendUnderAttackRegion: return "defend";
        case PolicyRegion::NoAttackRegion: return "no-attack";
    }
    return "unknown";
}

double max_policy(const ModelParams& params) {
    const double rl = params.r_lower();
    return rl + std::sqrt(2.0 * (1.0 - rl));
}

SignalingEquilibrium solve_signaling(const ModelParams& params, double r_prime) {
    const double rl = params.r_lower();
    const double r_tilde = max_policy(params);
    if (!(r_prime > rl)) throw DomainError("r_prime must exceed r_lower");
    if (!(r_prime <= r_tilde)) throw DomainError("r_prime must not exceed r_tilde");

    const double s = params.sigma();
    SignalingEquilibrium eq;
    eq.r_prime = r_prime;
    eq.r_tilde = r_tilde;
    eq.theta_lower = cost(params, r_prime);
    eq.theta_upper = 2.0 * s + (1.0 - 2.0 * s / (1.0 - rl)) * eq.theta_lower;
    eq.x_prime = eq.theta_upper + s * (2.0 * eq.theta_lower - 1.0);
    eq.theta_no_attack = eq.theta_upper + 2.0 * s * eq.theta_lower;
    return eq;
}

double policy_strategy(const SignalingEquilibrium& eq, const ModelParams& params, double theta) {
    if (theta >= eq.theta_lower && theta <= eq.theta_upper) return eq.r_prime;
    return params.r_lower();
}

double aggregate_attack_no_intervention(const ModelParams& params, const SignalingEquilibrium& eq,
                                        double theta) {
    const double s = params.sigma();
    const double kink_low = no_attack_slope(params) * eq.theta_lower;
    const double kink_high = 2.0 * s + kink_low;
    if (theta < kink_low) return 1.0;
    if (theta >= kink_high) return 0.0;
    return (kink_high - theta) / (2.0 * s);
}

double ex_post_welfare(const ModelParams& params, const SignalingEquilibrium& eq, double theta) {
    if (theta < eq.theta_lower) return 0.0;
    if (theta < eq.theta_upper) return theta - eq.theta_lower;
    if (theta < eq.theta_no_attack) {
        const double s = params.sigma();
        const double rl = params.r_lower();
        const double inv = 1.0 / (2.0 * s);
        return (1.0 + inv) * theta - (inv - rl / (1.0 - rl)) * eq.theta_lower - 1.0;
    }
    return theta;
}

PolicyRegion classify_region(const SignalingEquilibrium& eq, double theta) {
    if (theta < eq.theta_lower) return PolicyRegion::AbandonRegion;
    if (theta <= eq.theta_upper) return PolicyRegion::InterveneRegion;
    if (theta < eq.theta_no_attack) return PolicyRegion::DefendUnderAttackRegion;
    return PolicyRegion::NoAttackRegion;
}

}  // namespace regime_lab
