#pragma once

// Primitive environment of the regime-change game: noise level, baseline
// policy, and the payoff/cost formulas shared by every solver.

namespace regime_lab {

enum class AgentAction { Refrain = 0, Attack = 1 };
enum class RegimeDecision { Maintain = 0, Abandon = 1 };

/// Regime strength. Any finite real; the flat prior over the line is never
/// materialized, it only shows up as the posterior theta | x ~ U[x - sigma, x + sigma].
struct Fundamental {
    double theta = 0.0;
};

/// Immutable once validated. Construct through validate_params().
class ModelParams {
public:
    double sigma() const noexcept { return sigma_; }
    double r_lower() const noexcept { return r_lower_; }

private:
    ModelParams(double sigma, double r_lower) noexcept : sigma_(sigma), r_lower_(r_lower) {}
    friend ModelParams validate_params(double sigma, double r_lower);

    double sigma_;
    double r_lower_;
};

/// Throws DomainError unless sigma > 0 and 0 < r_lower < 1.
ModelParams validate_params(double sigma, double r_lower);

/// c(r) = (r - r_lower)^2 / 2. Requires r >= 0.
double cost(const ModelParams& params, double r);

/// 1 - r for a successful attack, -r for a failed one, 0 for refraining.
double agent_payoff(AgentAction action, double r, RegimeDecision decision);

/// (1 - d)(theta - alpha) - c(r). Requires alpha in [0, 1].
double policymaker_payoff(const ModelParams& params, double r, RegimeDecision decision,
                          double theta, double alpha);

}  // namespace regime_lab
