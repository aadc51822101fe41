#include "regime_lab/statics.hpp"

#include <algorithm>

#include "regime_lab/errors.hpp"
#include "regime_lab/parallel.hpp"

namespace regime_lab {

double critical_sigma(const ModelParams& params) {
    const double rl = params.r_lower();
    return (1.0 - rl) / (2.0 * rl);
}

SigmaRegime classify_sigma(const ModelParams& params) {
    const double star = critical_sigma(params);
    return {params.sigma() > star ? SigmaRegime::Kind::Noisy : SigmaRegime::Kind::Precise, star};
}

double lower_threshold_sensitivity(const ModelParams& params, double r_prime) {
    const double rl = params.r_lower();
    if (!(r_prime > rl && r_prime <= max_policy(params))) {
        throw DomainError("r_prime must lie in (r_lower, r_tilde]");
    }
    return r_prime - rl;
}

double welfare_derivative_in_rprime(const ModelParams& params, const SignalingEquilibrium& eq,
                                    double theta) {
    if (theta == eq.theta_lower || theta == eq.theta_upper || theta == eq.theta_no_attack) {
        throw BoundaryError("welfare is not differentiable in r_prime at a region boundary");
    }
    const double slope = lower_threshold_sensitivity(params, eq.r_prime);
    switch (classify_region(eq, theta)) {
        case PolicyRegion::AbandonRegion:
        case PolicyRegion::NoAttackRegion:
            return 0.0;
        case PolicyRegion::InterveneRegion:
            return -slope;
        case PolicyRegion::DefendUnderAttackRegion: {
            const double rl = params.r_lower();
            return -(1.0 / (2.0 * params.sigma()) - rl / (1.0 - rl)) * slope;
        }
    }
    return 0.0;
}

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::HigherUnderAggressive: return "higher";
        case Verdict::LowerUnderAggressive: return "lower";
        case Verdict::Equal: return "equal";
    }
    return "unknown";
}

WelfareComparison compare_welfare(const ModelParams& params, double r_low, double r_high,
                                  std::span<const double> theta_grid, double tol) {
    if (r_high < r_low) throw DomainError("r_high must not be below r_low");
    if (theta_grid.empty()) throw DomainError("theta grid must not be empty");
    if (!std::is_sorted(theta_grid.begin(), theta_grid.end())) {
        throw DomainError("theta grid must be sorted");
    }
    if (!(tol >= 0.0)) throw DomainError("comparison tolerance must be non-negative");

    const SignalingEquilibrium lo = solve_signaling(params, r_low);
    const SignalingEquilibrium hi = solve_signaling(params, r_high);

    WelfareComparison out;
    out.r_low = r_low;
    out.r_high = r_high;
    out.tol = tol;
    out.theta_grid.assign(theta_grid.begin(), theta_grid.end());
    const std::size_t n = theta_grid.size();
    out.u_low.reserve(n);
    out.u_high.reserve(n);
    out.region_low.reserve(n);
    out.region_high.reserve(n);
    out.verdicts.reserve(n);
    for (double theta : theta_grid) {
        const double ul = ex_post_welfare(params, lo, theta);
        const double uh = ex_post_welfare(params, hi, theta);
        out.u_low.push_back(ul);
        out.u_high.push_back(uh);
        out.region_low.push_back(classify_region(lo, theta));
        out.region_high.push_back(classify_region(hi, theta));
        const double diff = uh - ul;
        out.verdicts.push_back(diff > tol    ? Verdict::HigherUnderAggressive
                               : diff < -tol ? Verdict::LowerUnderAggressive
                                             : Verdict::Equal);
    }
    return out;
}

std::vector<double> linspace(const ThetaRange& range) {
    if (range.n < 2) throw DomainError("theta range needs at least two points");
    if (!(range.lo <= range.hi)) throw DomainError("theta range must satisfy lo <= hi");
    std::vector<double> out(range.n);
    const double step = (range.hi - range.lo) / static_cast<double>(range.n - 1);
    for (std::size_t i = 0; i < range.n; ++i) out[i] = range.lo + step * static_cast<double>(i);
    out.back() = range.hi;
    return out;
}

std::vector<SweepRow> sweep(const ModelParams& params, std::span<const double> r_primes,
                            std::span<const double> thetas) {
    std::vector<SignalingEquilibrium> family;
    family.reserve(r_primes.size());
    for (double rp : r_primes) family.push_back(solve_signaling(params, rp));

    const std::size_t n_theta = thetas.size();
    std::vector<SweepRow> rows(family.size() * n_theta);
    parallel_for(rows.size(), [&](std::size_t idx) {
        const SignalingEquilibrium& eq = family[idx / n_theta];
        const double theta = thetas[idx % n_theta];
        rows[idx] = {eq.r_prime, theta, classify_region(eq, theta),
                     aggregate_attack_no_intervention(params, eq, theta),
                     ex_post_welfare(params, eq, theta)};
    });
    return rows;
}

std::vector<SweepRow> sweep(const ModelParams& params, std::span<const double> r_primes,
                            const ThetaRange& range) {
    const std::vector<double> thetas = linspace(range);
    return sweep(params, r_primes, thetas);
}

}  // namespace regime_lab
