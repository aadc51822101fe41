#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "regime_lab/model.hpp"
#include "regime_lab/table.hpp"

namespace regime_lab::cli {

enum class Command { Continuation, Signaling, WelfareSweep, Compare, Simulate, Verify };
enum class OutputFormat { Csv, Json };

/// Parsed and validated command line.
struct RunConfig {
    Command command = Command::Continuation;
    double sigma = 0.0;
    double r_lower = 0.2;
    std::optional<double> r;
    std::vector<double> r_primes;
    std::optional<double> r_prime_hi;
    std::vector<double> thetas;
    std::string solver = "closed-form";
    double tol = 1e-9;
    std::size_t n_agents = 100'000;
    std::size_t n_reps = 20;
    std::uint64_t seed = 0;
    std::vector<double> sigma_grid;
    std::vector<double> rbar_grid;
    double perturb_theta_upper = 0.0;
    std::string out_path;
    OutputFormat format = OutputFormat::Csv;
};

/// Thrown for malformed arguments; run() maps it to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Accepts "lo:hi:step" (inclusive, hi snapped down to a step multiple),
/// a comma separated list, or a single number.
std::vector<double> parse_theta_grid(std::string_view spec);

/// Comma separated list of reals; the empty string is an empty list.
std::vector<double> parse_real_list(std::string_view spec);

/// Builds the output table for a validated config. Verify is not a table
/// command and is handled by run().
Table build_table(const RunConfig& config);

/// Entry point. args excludes the program name. Returns 0 on success, 1 when
/// the verification suite reports failures, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regime_lab::cli
