#include "regime_lab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "regime_lab/continuation.hpp"
#include "regime_lab/errors.hpp"
#include "regime_lab/monte_carlo.hpp"
#include "regime_lab/signaling.hpp"
#include "regime_lab/statics.hpp"
#include "regime_lab/verify.hpp"

namespace regime_lab::cli {
namespace {

double parse_real(std::string_view text) {
    const std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::string integer_text(std::uint64_t v) { return std::to_string(v); }

Cell num(double v) { return v; }

ModelParams params_of(const RunConfig& c) { return validate_params(c.sigma, c.r_lower); }

Table continuation_table(const RunConfig& c) {
    const ModelParams p = params_of(c);
    const double r = *c.r;
    ContinuationEquilibrium eq;
    if (c.solver == "dominance") {
        eq = solve_iterated_dominance(p, r, {c.tol, 10'000}).equilibrium;
    } else {
        eq = closed_form_thresholds(p, r);
    }
    Table t;
    if (c.thetas.empty()) {
        t.columns = {"sigma", "r", "x_cutoff", "theta_cutoff"};
        t.add_row({num(c.sigma), num(r), num(eq.x_cutoff), num(eq.theta_cutoff)});
        return t;
    }
    t.columns = {"sigma", "rbar", "r", "x_cutoff", "theta_cutoff", "theta", "attack", "welfare"};
    for (double theta : c.thetas) {
        t.add_row({num(c.sigma), num(c.r_lower), num(r), num(eq.x_cutoff), num(eq.theta_cutoff),
                   num(theta), num(attack_mass(p, eq.x_cutoff, theta)),
                   num(continuation_welfare(p, r, theta))});
    }
    return t;
}

Table signaling_table(const RunConfig& c) {
    const ModelParams p = params_of(c);
    Table t;
    t.columns = {"sigma", "rbar", "rprime", "r_tilde", "theta_lower", "theta_upper", "x_prime",
                 "theta_no_attack"};
    for (double rp : c.r_primes) {
        const SignalingEquilibrium eq = solve_signaling(p, rp);
        t.add_row({num(c.sigma), num(c.r_lower), num(rp), num(eq.r_tilde), num(eq.theta_lower),
                   num(eq.theta_upper), num(eq.x_prime), num(eq.theta_no_attack)});
    }
    return t;
}

Table sweep_table(const RunConfig& c) {
    const ModelParams p = params_of(c);
    Table t;
    t.columns = {"sigma", "rbar", "rprime", "theta", "region", "attack", "welfare"};
    for (const SweepRow& row : sweep(p, c.r_primes, c.thetas)) {
        t.add_row({num(c.sigma), num(c.r_lower), num(row.r_prime), num(row.theta),
                   std::string(to_string(row.region)), num(row.attack), num(row.welfare)});
    }
    return t;
}

Table compare_table(const RunConfig& c) {
    const ModelParams p = params_of(c);
    const double r_lo = c.r_primes.front();
    const WelfareComparison cmp = compare_welfare(p, r_lo, *c.r_prime_hi, c.thetas, c.tol);
    const SignalingEquilibrium eq = solve_signaling(p, r_lo);
    Table t;
    t.columns = {"sigma", "rbar", "rprime", "theta", "region", "attack", "welfare",
                 "rprime_hi", "welfare_hi", "verdict"};
    for (std::size_t i = 0; i < cmp.theta_grid.size(); ++i) {
        const double theta = cmp.theta_grid[i];
        t.add_row({num(c.sigma), num(c.r_lower), num(r_lo), num(theta),
                   std::string(to_string(cmp.region_low[i])),
                   num(aggregate_attack_no_intervention(p, eq, theta)), num(cmp.u_low[i]),
                   num(cmp.r_high), num(cmp.u_high[i]), std::string(to_string(cmp.verdicts[i]))});
    }
    return t;
}

Table simulate_table(const RunConfig& c) {
    const ModelParams p = params_of(c);
    const SimConfig sim{c.n_agents, c.n_reps, c.seed, false};
    const bool signaling = !c.r_primes.empty();
    Table t;
    t.columns = {"sigma", "rbar", "mode", "r", "theta", "n_agents", "n_reps", "seed",
                 "alpha_mean", "alpha_hw", "fall_freq", "welfare_mean"};
    for (double theta : c.thetas) {
        SimOutcome o;
        double r = 0.0;
        if (signaling) {
            r = c.r_primes.front();
            o = simulate_signaling(p, solve_signaling(p, r), theta, sim);
        } else {
            r = *c.r;
            o = simulate_continuation(p, r, theta, closed_form_thresholds(p, r).x_cutoff, sim);
        }
        t.add_row({num(c.sigma), num(c.r_lower), std::string(signaling ? "signaling" : "continuation"),
                   num(r), num(theta), integer_text(c.n_agents), integer_text(c.n_reps),
                   integer_text(c.seed), num(o.alpha_mean), num(o.alpha_halfwidth),
                   num(o.fall_frequency), num(o.welfare_mean)});
    }
    return t;
}

Table verify_table(const VerifyReport& report) {
    Table t;
    t.columns = {"check", "passed", "evaluations", "max_error", "tolerance"};
    for (const CheckResult& c : report.checks) {
        t.add_row({c.name, std::string(c.passed ? "true" : "false"), integer_text(c.evaluations),
                   num(c.max_error), num(c.tolerance)});
    }
    return t;
}

void emit(const Table& table, const RunConfig& c, bool single_object) {
    auto write = [&](std::ostream& os) {
        if (c.format == OutputFormat::Json) {
            write_json(table, os, single_object);
        } else {
            write_csv(table, os);
        }
    };
    std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file '" + c.out_path + "'");
    write(file);
}

void require(bool condition, const char* message) {
    if (!condition) throw UsageError(message);
}

void validate_for_command(const RunConfig& c) {
    switch (c.command) {
        case Command::Continuation:
            require(c.r.has_value(), "continuation requires --r");
            require(c.solver == "closed-form" || c.solver == "dominance",
                    "--solver must be closed-form or dominance");
            break;
        case Command::Signaling:
            require(!c.r_primes.empty(), "signaling requires --rprime");
            break;
        case Command::WelfareSweep:
            require(!c.r_primes.empty(), "welfare-sweep requires --rprime");
            require(!c.thetas.empty(), "welfare-sweep requires --theta");
            break;
        case Command::Compare:
            require(c.r_primes.size() == 1, "compare requires exactly one --rprime");
            require(c.r_prime_hi.has_value(), "compare requires --rprime-hi");
            require(!c.thetas.empty(), "compare requires --theta");
            break;
        case Command::Simulate:
            require(c.r.has_value() != !c.r_primes.empty(),
                    "simulate requires exactly one of --r or --rprime");
            require(c.r_primes.size() <= 1, "simulate accepts a single --rprime");
            require(!c.thetas.empty(), "simulate requires --theta");
            require(c.n_agents >= 1 && c.n_reps >= 1, "--agents and --reps must be positive");
            break;
        case Command::Verify:
            break;
    }
}

}  // namespace

std::vector<double> parse_real_list(std::string_view spec) {
    std::vector<double> out;
    if (spec.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = spec.find(',', start);
        out.push_back(parse_real(spec.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> parse_theta_grid(std::string_view spec) {
    if (spec.find(':') == std::string_view::npos) {
        std::vector<double> out = parse_real_list(spec);
        if (out.empty()) throw UsageError("theta grid must not be empty");
        if (!std::is_sorted(out.begin(), out.end())) throw UsageError("theta list must be sorted");
        return out;
    }
    const std::size_t a = spec.find(':');
    const std::size_t b = spec.find(':', a + 1);
    if (b == std::string_view::npos || spec.find(':', b + 1) != std::string_view::npos) {
        throw UsageError("theta grid must be lo:hi:step");
    }
    const double lo = parse_real(spec.substr(0, a));
    const double hi = parse_real(spec.substr(a + 1, b - a - 1));
    const double step = parse_real(spec.substr(b + 1));
    if (!(step > 0.0)) throw UsageError("theta grid step must be positive");
    if (!(hi >= lo)) throw UsageError("theta grid needs hi >= lo");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 50'000'000) throw UsageError("theta grid is too large");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Round away accumulated representation error so points sit on step multiples.
        const double raw = lo + step * static_cast<double>(i);
        out[i] = std::strtod(format_number(raw).c_str(), nullptr);
    }
    return out;
}

Table build_table(const RunConfig& config) {
    switch (config.command) {
        case Command::Continuation: return continuation_table(config);
        case Command::Signaling: return signaling_table(config);
        case Command::WelfareSweep: return sweep_table(config);
        case Command::Compare: return compare_table(config);
        case Command::Simulate: return simulate_table(config);
        case Command::Verify: break;
    }
    throw UsageError("verify does not produce a model table");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equilibrium laboratory for the regime-change signalling game", "regime-lab"};
    app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
    app.require_subcommand(1);

    RunConfig c;
    std::optional<double> sigma;
    std::optional<double> r;
    std::optional<double> r_hi;
    std::string rprime_spec, theta_spec, format = "csv";
    std::string sigma_grid = "0.1,0.5,1,2,3,5", rbar_grid = "0.2,0.5,0.8";

    app.add_option("--sigma", sigma, "Signal noise half-width (> 0)");
    app.add_option("--rbar", c.r_lower, "Baseline policy in (0,1)")->capture_default_str();
    app.add_option("--r", r, "Exogenous policy level in [0,1]");
    app.add_option("--rprime", rprime_spec, "Intervention level(s), comma separated")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--rprime-hi", r_hi, "More aggressive intervention for compare");
    app.add_option("--theta", theta_spec, "Fundamental grid lo:hi:step or a comma list")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--solver", c.solver, "closed-form or dominance")->capture_default_str();
    app.add_option("--tol", c.tol, "Solver / comparison tolerance")->capture_default_str();
    app.add_option("--agents", c.n_agents, "Agents per replication")->capture_default_str();
    app.add_option("--reps", c.n_reps, "Monte Carlo replications")->capture_default_str();
    app.add_option("--seed", c.seed, "Master seed")->capture_default_str();
    app.add_option("--sigma-grid", sigma_grid, "verify: sigma values")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join)->capture_default_str();
    app.add_option("--rbar-grid", rbar_grid, "verify: baseline policy values")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join)->capture_default_str();
    app.add_option("--perturb-theta-upper", c.perturb_theta_upper, "verify: negative-control hook");
    app.add_option("--out", c.out_path, "Output file (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    const std::pair<const char*, Command> commands[] = {
        {"continuation", Command::Continuation}, {"signaling", Command::Signaling},
        {"welfare-sweep", Command::WelfareSweep}, {"compare", Command::Compare},
        {"simulate", Command::Simulate},           {"verify", Command::Verify},
    };
    for (const auto& [name, cmd] : commands) {
        Command chosen = cmd;
        app.add_subcommand(name)->fallthrough()->callback([&c, chosen] { c.command = chosen; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "regime-lab: " << e.what() << '\n';
        return 2;
    }

    try {
        c.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        c.r = r;
        c.r_prime_hi = r_hi;
        c.r_primes = parse_real_list(rprime_spec);
        if (!theta_spec.empty()) c.thetas = parse_theta_grid(theta_spec);

        if (c.command == Command::Verify) {
            VerifyGrid grid;
            grid.sigmas = parse_real_list(sigma_grid);
            grid.r_lowers = parse_real_list(rbar_grid);
            const VerifyReport report = run_verify(grid, {c.perturb_theta_upper});
            if (report.checks.empty()) {
                err << "regime-lab: 0 checks\n";
                return 2;
            }
            const Table table = verify_table(report);
            if (c.out_path.empty()) {
                c.format == OutputFormat::Json ? write_json(table, out) : write_csv(table, out);
            } else {
                emit(table, c, false);
            }
            const auto failed = report.failed();
            if (!failed.empty()) {
                err << "regime-lab: verification failed:";
                for (const std::string& name : failed) err << ' ' << name;
                err << '\n';
                return 1;
            }
            return 0;
        }

        if (!sigma) throw UsageError("--sigma is required");
        c.sigma = *sigma;
        validate_params(c.sigma, c.r_lower);
        validate_for_command(c);

        Table table = build_table(c);
        const bool single = c.command == Command::Continuation && c.thetas.empty();
        if (single && c.format == OutputFormat::Json) {
            table.columns.push_back("solver");
            table.rows.front().push_back(c.solver);
        }
        if (c.out_path.empty()) {
            c.format == OutputFormat::Json ? write_json(table, out, single) : write_csv(table, out);
        } else {
            emit(table, c, single);
        }
        return 0;
    } catch (const UsageError& e) {
        err << "regime-lab: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "regime-lab: error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace regime_lab::cli
