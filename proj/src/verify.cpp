#include "regime_lab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "regime_lab/continuation.hpp"
#include "regime_lab/model.hpp"
#include "regime_lab/signaling.hpp"
#include "regime_lab/statics.hpp"

namespace regime_lab {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failed() const {
    std::vector<std::string> out;
    for (const CheckResult& c : checks) {
        if (!c.passed) out.push_back(c.name);
    }
    return out;
}

namespace {

// Accumulates |error| against a tolerance; a boolean condition records error 0 or +inf.
class Ledger {
public:
    void expect_close(const std::string& name, double error, double tol) {
        CheckResult& c = slot(name, tol);
        ++c.evaluations;
        const double e = std::isnan(error) ? std::numeric_limits<double>::infinity() : std::abs(error);
        c.max_error = std::max(c.max_error, e);
        if (!(e <= tol)) c.passed = false;
    }
    void expect(const std::string& name, bool condition) {
        expect_close(name, condition ? 0.0 : std::numeric_limits<double>::infinity(), 0.0);
    }
    VerifyReport report() && {
        VerifyReport r;
        for (const std::string& name : order_) r.checks.push_back(std::move(by_name_[name]));
        return r;
    }

private:
    CheckResult& slot(const std::string& name, double tol) {
        auto [it, inserted] = by_name_.try_emplace(name);
        if (inserted) {
            it->second.name = name;
            it->second.tolerance = tol;
            order_.push_back(name);
        }
        return it->second;
    }
    std::map<std::string, CheckResult> by_name_;
    std::vector<std::string> order_;
};

double left_limit(const ModelParams& p, const SignalingEquilibrium& eq, double theta) {
    return ex_post_welfare(p, eq, std::nextafter(theta, -std::numeric_limits<double>::infinity()));
}

void check_model(Ledger& L, const ModelParams& p) {
    for (int i = 0; i < 1000; ++i) {
        const double r = 2.0 * i / 999.0;
        const double c = cost(p, r);
        L.expect("cost_nonnegative", c >= 0.0 && (c > 0.0 || r == p.r_lower()));
    }
    L.expect("cost_zero_at_baseline", cost(p, p.r_lower()) == 0.0);
    for (double r : {0.0, 0.3, 0.9, 1.7}) {
        L.expect_close("success_premium_is_one",
                       agent_payoff(AgentAction::Attack, r, RegimeDecision::Abandon) -
                           agent_payoff(AgentAction::Attack, r, RegimeDecision::Maintain) - 1.0,
                       1e-12);
    }
}

void check_continuation(Ledger& L, const ModelParams& p, std::size_t n_policies) {
    const double s = p.sigma();
    double prev_x = std::numeric_limits<double>::infinity();
    double prev_t = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_policies; ++i) {
        const double r = n_policies > 1 ? static_cast<double>(i) / static_cast<double>(n_policies - 1) : 0.5;
        const ContinuationEquilibrium eq = closed_form_thresholds(p, r);
        L.expect_close("continuation_fixed_point", attack_mass(p, eq.x_cutoff, eq.theta_cutoff) - eq.theta_cutoff, 1e-12);
        L.expect_close("continuation_indifference", success_prob_given_signal(p, eq.theta_cutoff, eq.x_cutoff) - r, 1e-12);
        L.expect_close("continuation_marginal_agent", eq.x_cutoff - (eq.theta_cutoff + s * (1.0 - 2.0 * r)), 1e-12);

        const DominanceResult dom = solve_iterated_dominance(p, r);
        L.expect_close("dominance_matches_closed_form",
                       std::max(std::abs(dom.equilibrium.x_cutoff - eq.x_cutoff),
                                std::abs(dom.equilibrium.theta_cutoff - eq.theta_cutoff)),
                       1e-9);
        bool monotone = true;
        for (std::size_t k = 1; k < dom.trace.upper_seq.size(); ++k) {
            monotone = monotone && dom.trace.upper_seq[k] <= dom.trace.upper_seq[k - 1] &&
                       dom.trace.lower_seq[k] >= dom.trace.lower_seq[k - 1] &&
                       dom.trace.lower_seq[k] <= dom.trace.upper_seq[k];
        }
        L.expect("dominance_sequences_monotone", monotone);

        L.expect("continuation_decreasing_in_r", eq.x_cutoff < prev_x && eq.theta_cutoff < prev_t);
        prev_x = eq.x_cutoff;
        prev_t = eq.theta_cutoff;

        // Contraction on the interior of the best-response map.
        const double a = eq.x_cutoff - 0.3 * s, b = eq.x_cutoff + 0.2 * s;
        const double lhs = std::abs(best_response_cutoff(p, r, a) - best_response_cutoff(p, r, b));
        L.expect("best_response_contraction", lhs <= std::abs(a - b) / (1.0 + 2.0 * s) + 1e-15);
    }
}

void check_signaling(Ledger& L, const ModelParams& p, std::size_t n_family, const VerifyHooks& hooks) {
    const double s = p.sigma();
    const double rl = p.r_lower();
    const double r_tilde = max_policy(p);
    L.expect_close("max_policy_exhausts_budget", cost(p, r_tilde) - (1.0 - rl), 1e-12);

    const SigmaRegime regime = classify_sigma(p);
    const double defend_coef = 1.0 / (2.0 * s) - rl / (1.0 - rl);

    for (std::size_t k = 1; k <= n_family; ++k) {
        const double rp = rl + (r_tilde - rl) * static_cast<double>(k) / static_cast<double>(n_family);
        SignalingEquilibrium eq = solve_signaling(p, rp);
        eq.theta_upper += hooks.theta_upper_perturbation;

        L.expect("theta_lower_equals_cost", eq.theta_lower == cost(p, rp));
        L.expect_close("indifference_at_theta_upper",
                       aggregate_attack_no_intervention(p, eq, eq.theta_upper) - eq.theta_lower, 1e-12);
        L.expect_close("theta_no_attack_forms",
                       (eq.theta_upper + 2.0 * s * eq.theta_lower) -
                           (2.0 * s + (1.0 - 2.0 * s * rl / (1.0 - rl)) * eq.theta_lower),
                       1e-12);
        // theta_lower == theta_upper at r~ holds only up to rounding.
        L.expect("threshold_ordering", eq.theta_lower > 0.0 && eq.theta_lower <= eq.theta_upper + 1e-12 &&
                                           eq.theta_upper <= eq.theta_no_attack &&
                                           eq.theta_lower <= 1.0 - rl + 1e-12);

        for (double b : {eq.theta_lower, eq.theta_upper, eq.theta_no_attack}) {
            L.expect_close("welfare_continuity", ex_post_welfare(p, eq, b) - left_limit(p, eq, b), 1e-12);
        }

        const double lo = eq.theta_lower - 2.0 * s - 1.0;
        const double hi = eq.theta_no_attack + 1.0;
        for (int i = 0; i <= 200; ++i) {
            const double theta = lo + (hi - lo) * i / 200.0;
            L.expect_close("attack_cutoff_consistency",
                           aggregate_attack_no_intervention(p, eq, theta) - attack_mass(p, eq.x_prime, theta), 1e-12);
            if (theta >= eq.theta_upper && theta < eq.theta_no_attack) {
                L.expect_close("welfare_branch_consistency",
                               ex_post_welfare(p, eq, theta) -
                                   (theta - aggregate_attack_no_intervention(p, eq, theta)),
                               1e-12);
            }
        }

        L.expect_close("sensitivity_finite_difference",
                       (cost(p, rp + 1e-6) - cost(p, rp - 1e-6)) / 2e-6 - lower_threshold_sensitivity(p, rp), 1e-6);

        // Region interiors, far from the kinks relative to the h-induced shift.
        if (k == n_family) continue;
        const double h = 1e-5;
        std::vector<double> probes{eq.theta_lower - 0.5, eq.theta_no_attack + 0.5};
        const double margin = 1e-3;
        if (eq.theta_upper - eq.theta_lower > 2 * margin) probes.push_back(0.5 * (eq.theta_lower + eq.theta_upper));
        if (eq.theta_no_attack - eq.theta_upper > 2 * margin) probes.push_back(0.5 * (eq.theta_upper + eq.theta_no_attack));
        for (double theta : probes) {
            const SignalingEquilibrium up = solve_signaling(p, rp + h);
            const SignalingEquilibrium dn = solve_signaling(p, rp - h);
            const double fd = (ex_post_welfare(p, up, theta) - ex_post_welfare(p, dn, theta)) / (2.0 * h);
            const double analytic = welfare_derivative_in_rprime(p, eq, theta);
            L.expect_close("welfare_derivative_finite_difference", fd - analytic, 1e-6);

            const PolicyRegion region = classify_region(eq, theta);
            if (region == PolicyRegion::InterveneRegion) {
                L.expect("sign_law_intervene", analytic < 0.0);
            } else if (region == PolicyRegion::DefendUnderAttackRegion) {
                if (std::abs(defend_coef) < 1e-12) {
                    L.expect_close("sign_law_defend", analytic, 1e-12);
                } else {
                    L.expect("sign_law_defend",
                             regime.kind == SigmaRegime::Kind::Noisy ? analytic > 0.0 : analytic < 0.0);
                }
            } else {
                L.expect("sign_law_outer_regions", analytic == 0.0);
            }
        }
    }

    // Pairwise welfare ranking across the family.
    const double rp_lo = rl + 0.5 * (r_tilde - rl);
    const double rp_hi = rl + 0.75 * (r_tilde - rl);
    const SignalingEquilibrium a = solve_signaling(p, rp_lo);
    std::vector<double> grid;
    const double lo = -1.0, hi = a.theta_no_attack + 1.0;
    for (int i = 0; i <= 2000; ++i) grid.push_back(lo + (hi - lo) * i / 2000.0);
    const WelfareComparison cmp = compare_welfare(p, rp_lo, rp_hi, grid);
    const bool any_higher = std::count(cmp.verdicts.begin(), cmp.verdicts.end(), Verdict::HigherUnderAggressive) > 0;
    const bool any_lower = std::count(cmp.verdicts.begin(), cmp.verdicts.end(), Verdict::LowerUnderAggressive) > 0;
    if (regime.kind == SigmaRegime::Kind::Precise) {
        L.expect("precise_global_dominance", !any_higher);
    } else {
        L.expect("noisy_crossing", any_higher && any_lower);
    }
}

}  // namespace

VerifyReport run_verify(const VerifyGrid& grid, const VerifyHooks& hooks) {
    Ledger L;
    for (double sigma : grid.sigmas) {
        for (double rl : grid.r_lowers) {
            const ModelParams p = validate_params(sigma, rl);
            check_model(L, p);
            check_continuation(L, p, grid.n_policies);
            check_signaling(L, p, grid.n_family, hooks);
        }
    }
    return std::move(L).report();
}

}  // namespace regime_lab
