#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "regime_lab/model.hpp"
#include "regime_lab/signaling.hpp"

namespace regime_lab {

/// Whether agents' signals are noisy enough for aggressive policy to help
/// strong types. Noisy iff sigma > sigma_star = (1 - r_lower) / (2 r_lower).
struct SigmaRegime {
    enum class Kind { Precise, Noisy };
    Kind kind = Kind::Precise;
    double sigma_star = 0.0;
};

double critical_sigma(const ModelParams& params);
SigmaRegime classify_sigma(const ModelParams& params);

/// d theta_lower / d r_prime = r_prime - r_lower, on (r_lower, r~].
double lower_threshold_sensitivity(const ModelParams& params, double r_prime);

/// dU(theta; r_prime)/d r_prime at fixed theta. Zero outside the two middle
/// regions; -(r' - r_lower) while intervening; -(1/(2 sigma) - r_lower/(1 - r_lower))(r' - r_lower)
/// while defending under attack. Throws BoundaryError at the three kinks.
double welfare_derivative_in_rprime(const ModelParams& params, const SignalingEquilibrium& eq,
                                    double theta);

enum class Verdict { HigherUnderAggressive, LowerUnderAggressive, Equal };

std::string_view to_string(Verdict verdict) noexcept;

struct WelfareComparison {
    double r_low = 0.0;
    double r_high = 0.0;
    double tol = 0.0;
    std::vector<double> theta_grid;
    std::vector<double> u_low;
    std::vector<double> u_high;
    std::vector<PolicyRegion> region_low;
    std::vector<PolicyRegion> region_high;
    std::vector<Verdict> verdicts;
};

inline constexpr double kDefaultWelfareTol = 1e-9;

/// Tabulates U(theta; r_low) and U(theta; r_high) on a sorted grid.
/// r_high == r_low is accepted and yields an all-Equal comparison.
WelfareComparison compare_welfare(const ModelParams& params, double r_low, double r_high,
                                  std::span<const double> theta_grid,
                                  double tol = kDefaultWelfareTol);

struct ThetaRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 2;
};

/// n evenly spaced points from lo to hi inclusive. Requires n >= 2 and lo <= hi.
std::vector<double> linspace(const ThetaRange& range);

struct SweepRow {
    double r_prime = 0.0;
    double theta = 0.0;
    PolicyRegion region = PolicyRegion::AbandonRegion;
    double attack = 0.0;   // aggregate attack following no intervention
    double welfare = 0.0;  // U(theta; r_prime)
};

/// One row per (r_prime, theta), r_prime outer.
std::vector<SweepRow> sweep(const ModelParams& params, std::span<const double> r_primes,
                            std::span<const double> thetas);
std::vector<SweepRow> sweep(const ModelParams& params, std::span<const double> r_primes,
                            const ThetaRange& range);

}  // namespace regime_lab
