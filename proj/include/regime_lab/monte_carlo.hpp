#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "regime_lab/model.hpp"
#include "regime_lab/signaling.hpp"

namespace regime_lab {

struct SimConfig {
    std::size_t n_agents = 100'000;
    std::size_t n_reps = 20;
    std::uint64_t master_seed = 0;
    bool keep_per_rep = false;
};

struct RepOutcome {
    double alpha = 0.0;
    RegimeDecision decision = RegimeDecision::Maintain;
    double welfare = 0.0;
};

struct SimOutcome {
    double alpha_mean = 0.0;
    /// 99% normal-approximation half-width of alpha_mean across replications.
    double alpha_halfwidth = 0.0;
    double fall_frequency = 0.0;
    double welfare_mean = 0.0;
    std::optional<std::vector<RepOutcome>> per_rep;
};

/// Seed of replication `rep`, derived from the master seed by a counter-based
/// mix so that replications are independent of scheduling.
std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t rep) noexcept;

/// Fills `out` with noise draws uniform on [-sigma, sigma) for one replication.
void draw_noise(const ModelParams& params, std::uint64_t master_seed, std::uint64_t rep,
                std::vector<double>& out);

/// Finite population with the continuation cutoff: attack iff theta + eps <= x_cutoff,
/// abandon iff theta <= alpha.
SimOutcome simulate_continuation(const ModelParams& params, double r, double theta,
                                 double x_cutoff, const SimConfig& config);

/// Plays the signalling equilibrium: intervening types face no attack, the
/// rest play the continuation game at r_lower with cutoff x_prime.
SimOutcome simulate_signaling(const ModelParams& params, const SignalingEquilibrium& eq,
                              double theta, const SimConfig& config);

/// Empirical analogue of iterated dominance: best responses are computed from
/// sampled noise instead of the analytic attack mass and posterior. Runs
/// `iters` rounds from both extreme cutoffs in each replication and returns the
/// mean meeting point. Throws ConvergenceError if the two sequences are still
/// apart by more than the sampling resolution.
double finite_best_response(const ModelParams& params, double r, const SimConfig& config,
                            std::size_t iters);

}  // namespace regime_lab
