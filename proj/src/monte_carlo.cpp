#include "regime_lab/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "regime_lab/errors.hpp"
#include "regime_lab/parallel.hpp"

namespace regime_lab {
namespace {

constexpr double kZ99 = 2.5758293035489004;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void validate(const SimConfig& config) {
    if (config.n_agents < 1) throw DomainError("n_agents must be at least 1");
    if (config.n_reps < 1) throw DomainError("n_reps must be at least 1");
}

SimOutcome aggregate(const std::vector<RepOutcome>& reps, bool keep) {
    SimOutcome out;
    const double n = static_cast<double>(reps.size());
    double alpha_sum = 0.0, welfare_sum = 0.0;
    std::size_t falls = 0;
    for (const RepOutcome& rep : reps) {
        alpha_sum += rep.alpha;
        welfare_sum += rep.welfare;
        if (rep.decision == RegimeDecision::Abandon) ++falls;
    }
    out.alpha_mean = alpha_sum / n;
    out.welfare_mean = welfare_sum / n;
    out.fall_frequency = static_cast<double>(falls) / n;
    if (reps.size() > 1) {
        double ss = 0.0;
        for (const RepOutcome& rep : reps) ss += (rep.alpha - out.alpha_mean) * (rep.alpha - out.alpha_mean);
        out.alpha_halfwidth = kZ99 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    if (keep) out.per_rep = reps;
    return out;
}

// sup{theta in [0, 1] : F_N(x_hat - theta) >= theta} over sorted noise.
double empirical_fall_threshold(const std::vector<double>& sorted_noise, double x_hat) {
    const double n = static_cast<double>(sorted_noise.size());
    auto attack = [&](double theta) {
        auto it = std::upper_bound(sorted_noise.begin(), sorted_noise.end(), x_hat - theta);
        return static_cast<double>(it - sorted_noise.begin()) / n;
    };
    if (attack(1.0) >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (attack(mid) >= mid) lo = mid; else hi = mid;
    }
    return lo;
}

}  // namespace

std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t rep) noexcept {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(rep + 0x632BE59BD9B4E019ULL));
}

void draw_noise(const ModelParams& params, std::uint64_t master_seed, std::uint64_t rep,
                std::vector<double>& out) {
    std::mt19937_64 engine(replication_seed(master_seed, rep));
    const double s = params.sigma();
    for (double& eps : out) {
        // 53 random mantissa bits; uniform on [0, 1).
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        eps = -s + 2.0 * s * u;
    }
}

SimOutcome simulate_continuation(const ModelParams& params, double r, double theta,
                                 double x_cutoff, const SimConfig& config) {
    validate(config);
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
    const double c = cost(params, r);

    std::vector<RepOutcome> reps(config.n_reps);
    parallel_for(config.n_reps, [&](std::size_t rep) {
        std::vector<double> noise(config.n_agents);
        draw_noise(params, config.master_seed, rep, noise);
        std::size_t attackers = 0;
        for (double eps : noise) {
            if (theta + eps <= x_cutoff) ++attackers;
        }
        const double alpha = static_cast<double>(attackers) / static_cast<double>(config.n_agents);
        const RegimeDecision d = theta <= alpha ? RegimeDecision::Abandon : RegimeDecision::Maintain;
        const double welfare = d == RegimeDecision::Abandon ? -c : (theta - alpha) - c;
        reps[rep] = {alpha, d, welfare};
    });
    return aggregate(reps, config.keep_per_rep);
}

SimOutcome simulate_signaling(const ModelParams& params, const SignalingEquilibrium& eq,
                              double theta, const SimConfig& config) {
    validate(config);
    if (policy_strategy(eq, params, theta) == eq.r_prime) {
        const RepOutcome on_path{0.0, RegimeDecision::Maintain, theta - cost(params, eq.r_prime)};
        return aggregate(std::vector<RepOutcome>(config.n_reps, on_path), config.keep_per_rep);
    }
    return simulate_continuation(params, params.r_lower(), theta, eq.x_prime, config);
}

double finite_best_response(const ModelParams& params, double r, const SimConfig& config,
                            std::size_t iters) {
    validate(config);
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("policy r must lie in [0,1]");
    if (iters < 1) throw DomainError("iters must be at least 1");

    const double s = params.sigma();
    const std::size_t n = config.n_agents;
    // Posterior of theta given x is x - eps; the indifferent agent sits at the
    // (1 - r) empirical quantile of eps above the fall threshold.
    const auto quantile_index = std::min<std::size_t>(
        n - 1, static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1.0 - r))));
    const double resolution = 20.0 * 2.0 * s / static_cast<double>(n) + 1e-12;

    std::vector<double> meets(config.n_reps);
    std::vector<double> gaps(config.n_reps);
    parallel_for(config.n_reps, [&](std::size_t rep) {
        std::vector<double> noise(n);
        draw_noise(params, config.master_seed, rep, noise);
        std::sort(noise.begin(), noise.end());
        const double offset = noise[quantile_index];
        double upper = 1.0 + s + 1.0;
        double lower = -s - 1.0;
        for (std::size_t k = 0; k < iters; ++k) {
            upper = empirical_fall_threshold(noise, upper) + offset;
            lower = empirical_fall_threshold(noise, lower) + offset;
        }
        meets[rep] = 0.5 * (upper + lower);
        gaps[rep] = upper - lower;
    });

    const double worst_gap = *std::max_element(gaps.begin(), gaps.end());
    if (worst_gap > resolution) {
        throw ConvergenceError("empirical best-response sequences still " +
                               std::to_string(worst_gap) + " apart after " +
                               std::to_string(iters) + " iterations");
    }
    double sum = 0.0;
    for (double m : meets) sum += m;
    return sum / static_cast<double>(meets.size());
}

}  // namespace regime_lab
