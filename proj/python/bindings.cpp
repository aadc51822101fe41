#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "regime_lab/cli.hpp"
#include "regime_lab/continuation.hpp"
#include "regime_lab/errors.hpp"
#include "regime_lab/model.hpp"
#include "regime_lab/monte_carlo.hpp"
#include "regime_lab/signaling.hpp"
#include "regime_lab/statics.hpp"
#include "regime_lab/verify.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace regime_lab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Threshold equilibria, welfare and Monte Carlo checks for the regime-change signalling game";
    m.attr("__version__") = "0.1.0";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BoundaryError>(m, "BoundaryError", domain_error.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    // model
    py::enum_<AgentAction>(m, "AgentAction")
        .value("Refrain", AgentAction::Refrain)
        .value("Attack", AgentAction::Attack);
    py::enum_<RegimeDecision>(m, "RegimeDecision")
        .value("Maintain", RegimeDecision::Maintain)
        .value("Abandon", RegimeDecision::Abandon);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init(&validate_params), "sigma"_a, "r_lower"_a)
        .def_property_readonly("sigma", &ModelParams::sigma)
        .def_property_readonly("r_lower", &ModelParams::r_lower)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream os;
            os << "ModelParams(sigma=" << p.sigma() << ", r_lower=" << p.r_lower() << ")";
            return os.str();
        });
    m.def("validate_params", &validate_params, "sigma"_a, "r_lower"_a);
    m.def("cost", &cost, "params"_a, "r"_a);
    m.def("agent_payoff", &agent_payoff, "action"_a, "r"_a, "decision"_a);
    m.def("policymaker_payoff", &policymaker_payoff, "params"_a, "r"_a, "decision"_a, "theta"_a, "alpha"_a);

    // continuation
    py::class_<ContinuationEquilibrium>(m, "ContinuationEquilibrium")
        .def_readonly("r", &ContinuationEquilibrium::r)
        .def_readonly("x_cutoff", &ContinuationEquilibrium::x_cutoff)
        .def_readonly("theta_cutoff", &ContinuationEquilibrium::theta_cutoff);
    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<double, std::size_t>(), "tol"_a = 1e-9, "max_iter"_a = 10'000)
        .def_readwrite("tol", &SolverConfig::tol)
        .def_readwrite("max_iter", &SolverConfig::max_iter);
    py::class_<DominanceTrace>(m, "DominanceTrace")
        .def_readonly("upper_seq", &DominanceTrace::upper_seq)
        .def_readonly("lower_seq", &DominanceTrace::lower_seq)
        .def_readonly("converged", &DominanceTrace::converged)
        .def_readonly("contraction_modulus", &DominanceTrace::contraction_modulus);

    m.def("closed_form_thresholds", &closed_form_thresholds, "params"_a, "r"_a);
    m.def("attack_mass", &attack_mass, "params"_a, "x_cutoff"_a, "theta"_a);
    m.def("success_prob_given_signal", &success_prob_given_signal, "params"_a, "theta_cutoff"_a, "x"_a);
    m.def("regime_fall_threshold", &regime_fall_threshold, "params"_a, "x_cutoff"_a);
    m.def("best_response_cutoff", &best_response_cutoff, "params"_a, "r"_a, "x_hat"_a);
    m.def(
        "solve_iterated_dominance",
        [](const ModelParams& p, double r, const SolverConfig& cfg) {
            DominanceResult res = solve_iterated_dominance(p, r, cfg);
            return py::make_tuple(res.equilibrium, res.trace);
        },
        "params"_a, "r"_a, "config"_a = SolverConfig{});
    m.def("continuation_welfare", &continuation_welfare, "params"_a, "r"_a, "theta"_a);

    // signalling
    py::class_<SignalingEquilibrium>(m, "SignalingEquilibrium")
        .def_readonly("r_prime", &SignalingEquilibrium::r_prime)
        .def_readonly("theta_lower", &SignalingEquilibrium::theta_lower)
        .def_readonly("theta_upper", &SignalingEquilibrium::theta_upper)
        .def_readonly("x_prime", &SignalingEquilibrium::x_prime)
        .def_readonly("theta_no_attack", &SignalingEquilibrium::theta_no_attack)
        .def_readonly("r_tilde", &SignalingEquilibrium::r_tilde);
    py::enum_<PolicyRegion>(m, "PolicyRegion")
        .value("AbandonRegion", PolicyRegion::AbandonRegion)
        .value("InterveneRegion", PolicyRegion::InterveneRegion)
        .value("DefendUnderAttackRegion", PolicyRegion::DefendUnderAttackRegion)
        .value("NoAttackRegion", PolicyRegion::NoAttackRegion);

    m.def("max_policy", &max_policy, "params"_a);
    m.def("solve_signaling", &solve_signaling, "params"_a, "r_prime"_a);
    m.def("policy_strategy", &policy_strategy, "eq"_a, "params"_a, "theta"_a);
    m.def("aggregate_attack_no_intervention", &aggregate_attack_no_intervention, "params"_a, "eq"_a, "theta"_a);
    m.def("ex_post_welfare", &ex_post_welfare, "params"_a, "eq"_a, "theta"_a);
    m.def("classify_region", &classify_region, "eq"_a, "theta"_a);

    // comparative statics
    py::enum_<Verdict>(m, "Verdict")
        .value("HigherUnderAggressive", Verdict::HigherUnderAggressive)
        .value("LowerUnderAggressive", Verdict::LowerUnderAggressive)
        .value("Equal", Verdict::Equal);
    py::class_<WelfareComparison>(m, "WelfareComparison")
        .def_readonly("r_low", &WelfareComparison::r_low)
        .def_readonly("r_high", &WelfareComparison::r_high)
        .def_readonly("tol", &WelfareComparison::tol)
        .def_readonly("theta_grid", &WelfareComparison::theta_grid)
        .def_readonly("u_low", &WelfareComparison::u_low)
        .def_readonly("u_high", &WelfareComparison::u_high)
        .def_readonly("region_low", &WelfareComparison::region_low)
        .def_readonly("region_high", &WelfareComparison::region_high)
        .def_readonly("verdicts", &WelfareComparison::verdicts);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("r_prime", &SweepRow::r_prime)
        .def_readonly("theta", &SweepRow::theta)
        .def_readonly("region", &SweepRow::region)
        .def_readonly("attack", &SweepRow::attack)
        .def_readonly("welfare", &SweepRow::welfare);

    m.def("critical_sigma", &critical_sigma, "params"_a);
    m.def("is_noisy", [](const ModelParams& p) { return classify_sigma(p).kind == SigmaRegime::Kind::Noisy; },
          "params"_a);
    m.def("lower_threshold_sensitivity", &lower_threshold_sensitivity, "params"_a, "r_prime"_a);
    m.def("welfare_derivative_in_rprime", &welfare_derivative_in_rprime, "params"_a, "eq"_a, "theta"_a);
    m.def(
        "compare_welfare",
        [](const ModelParams& p, double lo, double hi, const std::vector<double>& grid, double tol) {
            return compare_welfare(p, lo, hi, grid, tol);
        },
        "params"_a, "r_low"_a, "r_high"_a, "theta_grid"_a, "tol"_a = kDefaultWelfareTol);
    m.def(
        "sweep",
        [](const ModelParams& p, const std::vector<double>& r_primes, const std::vector<double>& thetas) {
            return sweep(p, r_primes, thetas);
        },
        "params"_a, "r_primes"_a, "thetas"_a);

    // monte carlo
    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](std::size_t n_agents, std::size_t n_reps, std::uint64_t seed, bool keep) {
                 return SimConfig{n_agents, n_reps, seed, keep};
             }),
             "n_agents"_a = 100'000, "n_reps"_a = 20, "master_seed"_a = 0, "keep_per_rep"_a = false)
        .def_readwrite("n_agents", &SimConfig::n_agents)
        .def_readwrite("n_reps", &SimConfig::n_reps)
        .def_readwrite("master_seed", &SimConfig::master_seed)
        .def_readwrite("keep_per_rep", &SimConfig::keep_per_rep);
    py::class_<RepOutcome>(m, "RepOutcome")
        .def_readonly("alpha", &RepOutcome::alpha)
        .def_readonly("decision", &RepOutcome::decision)
        .def_readonly("welfare", &RepOutcome::welfare);
    py::class_<SimOutcome>(m, "SimOutcome")
        .def_readonly("alpha_mean", &SimOutcome::alpha_mean)
        .def_readonly("alpha_halfwidth", &SimOutcome::alpha_halfwidth)
        .def_readonly("fall_frequency", &SimOutcome::fall_frequency)
        .def_readonly("welfare_mean", &SimOutcome::welfare_mean)
        .def_readonly("per_rep", &SimOutcome::per_rep);

    m.def("simulate_continuation", &simulate_continuation, "params"_a, "r"_a, "theta"_a, "x_cutoff"_a,
          "config"_a, py::call_guard<py::gil_scoped_release>());
    m.def("simulate_signaling", &simulate_signaling, "params"_a, "eq"_a, "theta"_a, "config"_a,
          py::call_guard<py::gil_scoped_release>());
    m.def("finite_best_response", &finite_best_response, "params"_a, "r"_a, "config"_a, "iters"_a,
          py::call_guard<py::gil_scoped_release>());

    // verification and CLI
    m.def(
        "run_verify",
        [](const std::vector<double>& sigmas, const std::vector<double>& r_lowers, double perturb) {
            VerifyGrid grid;
            grid.sigmas = sigmas;
            grid.r_lowers = r_lowers;
            py::list out;
            for (const CheckResult& c : run_verify(grid, {perturb}).checks) {
                out.append(py::dict("name"_a = c.name, "passed"_a = c.passed, "evaluations"_a = c.evaluations,
                                    "max_error"_a = c.max_error, "tolerance"_a = c.tolerance));
            }
            return out;
        },
        "sigmas"_a = VerifyGrid{}.sigmas, "r_lowers"_a = VerifyGrid{}.r_lowers, "perturb_theta_upper"_a = 0.0);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "args"_a, "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
