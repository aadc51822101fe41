#include "regime_lab/model.hpp"

#include <cmath>

#include "regime_lab/errors.hpp"

namespace regime_lab {

ModelParams validate_params(double sigma, double r_lower) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
    if (!(r_lower > 0.0 && r_lower < 1.0)) throw DomainError("r_lower must lie in (0,1)");
    return ModelParams(sigma, r_lower);
}

double cost(const ModelParams& params, double r) {
    if (!(r >= 0.0)) throw DomainError("policy r must be non-negative");
    const double gap = r - params.r_lower();
    return 0.5 * gap * gap;
}

double agent_payoff(AgentAction action, double r, RegimeDecision decision) {
    if (!(r >= 0.0)) throw DomainError("policy r must be non-negative");
    if (action == AgentAction::Refrain) return 0.0;
    return decision == RegimeDecision::Abandon ? 1.0 - r : -r;
}

double policymaker_payoff(const ModelParams& params, double r, RegimeDecision decision,
                          double theta, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
    const double c = cost(params, r);
    if (decision == RegimeDecision::Abandon) return -c;
    return (theta - alpha) - c;
}

}  // namespace regime_lab
