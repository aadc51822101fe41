#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "regime_lab/continuation.hpp"
#include "regime_lab/errors.hpp"

using namespace regime_lab;

namespace {
const ModelParams kHalf = validate_params(0.5, 0.2);
const ModelParams kThree = validate_params(3.0, 0.2);
}  // namespace

TEST_CASE("closed-form thresholds match the nested-bisection oracle") {
    // Frozen from oracle::equilibrium_cutoff.
    CHECK(oracle::equilibrium_cutoff(0.5, 0.25) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(oracle::equilibrium_cutoff(3.0, 0.5) == doctest::Approx(0.5).epsilon(1e-10));

    ContinuationEquilibrium eq = closed_form_thresholds(kHalf, 0.25);
    CHECK(eq.x_cutoff == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eq.theta_cutoff == doctest::Approx(0.75).epsilon(1e-14));

    eq = closed_form_thresholds(kHalf, 1.0);
    CHECK(eq.x_cutoff == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(eq.theta_cutoff == 0.0);

    eq = closed_form_thresholds(kThree, 0.5);
    CHECK(eq.x_cutoff == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eq.theta_cutoff == doctest::Approx(0.5).epsilon(1e-14));

    for (double sigma : {0.1, 0.7, 2.5}) {
        const ModelParams p = validate_params(sigma, 0.3);
        for (double r : {0.05, 0.3, 0.6, 0.95}) {
            CHECK(closed_form_thresholds(p, r).x_cutoff ==
                  doctest::Approx(oracle::equilibrium_cutoff(sigma, r)).epsilon(1e-9));
        }
    }

    CHECK_THROWS_AS(closed_form_thresholds(kHalf, -0.01), DomainError);
    CHECK_THROWS_AS(closed_form_thresholds(kHalf, 1.01), DomainError);
}

TEST_CASE("attack mass and posterior agree with the interval-overlap oracle") {
    CHECK(attack_mass(kHalf, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(attack_mass(kHalf, 1.0, 0.4) == 1.0);
    CHECK(attack_mass(kHalf, 1.0, 1.6) == 0.0);

    CHECK(success_prob_given_signal(kHalf, 0.75, 1.0) == doctest::Approx(0.25));
    CHECK(success_prob_given_signal(kHalf, 0.75, 0.2) == 1.0);
    CHECK(success_prob_given_signal(kHalf, 0.75, 1.3) == 0.0);

    for (int i = -30; i <= 30; ++i) {
        const double theta = 0.1 * i;
        for (double x : {-1.0, 0.0, 0.7, 2.2}) {
            CHECK(attack_mass(kThree, x, theta) == doctest::Approx(oracle::attack_share(3.0, x, theta)).epsilon(1e-13));
            CHECK(success_prob_given_signal(kThree, x, theta) ==
                  doctest::Approx(oracle::posterior_below(3.0, x, theta)).epsilon(1e-13));
        }
    }
}

TEST_CASE("attack mass is monotone and bounded") {
    for (int i = -40; i <= 40; ++i) {
        const double theta = 0.05 * i;
        for (double x : {-0.5, 0.3, 1.1}) {
            const double a = attack_mass(kHalf, x, theta);
            CHECK(a >= 0.0);
            CHECK(a <= 1.0);
            CHECK(attack_mass(kHalf, x, theta + 0.05) <= a);
            CHECK(attack_mass(kHalf, x + 0.05, theta) >= a);
        }
    }
}

TEST_CASE("regime fall threshold solves A(theta) = theta, clamped to [0,1]") {
    CHECK(regime_fall_threshold(kHalf, 1.0) == doctest::Approx(0.75));
    CHECK(oracle::fall_threshold(0.5, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(regime_fall_threshold(kHalf, -10.0) == 0.0);
    CHECK(regime_fall_threshold(kHalf, 10.0) == 1.0);
    for (int i = -20; i <= 40; ++i) {
        const double x = 0.1 * i;
        CHECK(regime_fall_threshold(kThree, x) == doctest::Approx(oracle::fall_threshold(3.0, x)).epsilon(1e-12));
    }
}

TEST_CASE("best response cutoff") {
    CHECK(best_response_cutoff(kHalf, 0.25, 1.0) == doctest::Approx(1.0));
    CHECK(best_response_cutoff(kHalf, 0.25, 3.0) == doctest::Approx(1.25));
    CHECK(best_response_cutoff(kHalf, 0.5, 1.0) == doctest::Approx(0.75));
    CHECK_THROWS_AS(best_response_cutoff(kHalf, 1.5, 1.0), DomainError);

    SUBCASE("contraction with modulus 1/(1+2 sigma) on the interior") {
        for (double sigma : {0.1, 0.5, 2.0, 5.0}) {
            const ModelParams p = validate_params(sigma, 0.2);
            const double modulus = 1.0 / (1.0 + 2.0 * sigma);
            for (int i = 0; i < 200; ++i) {
                // Deterministic pseudo-random interior pairs: cutoffs in [-sigma, 1 + sigma].
                const double u = std::fmod(0.6180339887 * (i + 1), 1.0);
                const double v = std::fmod(0.7548776662 * (i + 3), 1.0);
                const double a = -sigma + (1.0 + 2.0 * sigma) * u;
                const double b = -sigma + (1.0 + 2.0 * sigma) * v;
                const double r = std::fmod(0.5698402910 * (i + 7), 1.0);
                CHECK(std::abs(best_response_cutoff(p, r, a) - best_response_cutoff(p, r, b)) <=
                      std::abs(a - b) * modulus + 1e-15);
            }
        }
    }
}

TEST_CASE("iterated dominance converges to the closed form") {
    const SolverConfig cfg{1e-9, 10'000};
    DominanceResult res = solve_iterated_dominance(kHalf, 0.25, cfg);
    CHECK(res.trace.converged);
    CHECK(res.trace.contraction_modulus == doctest::Approx(0.5));
    CHECK(std::abs(res.equilibrium.x_cutoff - 1.0) <= 1e-9);
    CHECK(std::abs(res.equilibrium.theta_cutoff - 0.75) <= 1e-9);

    // Upper sequence strictly decreasing until the gap closes.
    const auto& up = res.trace.upper_seq;
    const auto& lo = res.trace.lower_seq;
    REQUIRE(up.size() == lo.size());
    for (std::size_t k = 1; k < up.size(); ++k) {
        CHECK(up[k] < up[k - 1]);
        CHECK(lo[k] >= lo[k - 1]);
        CHECK(lo[k] <= up[k]);
    }

    res = solve_iterated_dominance(kThree, 0.5, cfg);
    CHECK(std::abs(res.equilibrium.x_cutoff - 0.5) <= 1e-9);

    SUBCASE("corner policies") {
        for (double r : {0.0, 1.0}) {
            const DominanceResult c = solve_iterated_dominance(kHalf, r, cfg);
            const ContinuationEquilibrium cf = closed_form_thresholds(kHalf, r);
            CHECK(std::abs(c.equilibrium.x_cutoff - cf.x_cutoff) <= 1e-9);
            CHECK(std::abs(c.equilibrium.theta_cutoff - cf.theta_cutoff) <= 1e-9);
        }
    }
    SUBCASE("budget exhaustion and bad config") {
        CHECK_THROWS_AS(solve_iterated_dominance(kHalf, 0.25, {1e-9, 3}), ConvergenceError);
        CHECK_THROWS_AS(solve_iterated_dominance(kHalf, 0.25, {0.0, 10}), DomainError);
        CHECK_THROWS_AS(solve_iterated_dominance(kHalf, 0.25, {1e-9, 0}), DomainError);
        CHECK_THROWS_AS(solve_iterated_dominance(kHalf, -0.25, cfg), DomainError);
    }
}

TEST_CASE("continuation identities over a 20x20 grid") {
    for (int i = 0; i < 20; ++i) {
        const double sigma = 0.1 + (5.0 - 0.1) * i / 19.0;
        const ModelParams p = validate_params(sigma, 0.2);
        double prev_x = INFINITY, prev_t = INFINITY;
        for (int j = 0; j < 20; ++j) {
            const double r = j / 19.0;
            const ContinuationEquilibrium eq = closed_form_thresholds(p, r);
            CHECK(std::abs(attack_mass(p, eq.x_cutoff, eq.theta_cutoff) - eq.theta_cutoff) <= 1e-12);
            CHECK(std::abs(success_prob_given_signal(p, eq.theta_cutoff, eq.x_cutoff) - r) <= 1e-12);
            CHECK(std::abs(eq.x_cutoff - (eq.theta_cutoff + sigma * (1.0 - 2.0 * r))) <= 1e-12);
            CHECK(eq.x_cutoff < prev_x);
            CHECK(eq.theta_cutoff < prev_t);
            prev_x = eq.x_cutoff;
            prev_t = eq.theta_cutoff;
        }
    }
}

TEST_CASE("continuation welfare benchmark") {
    CHECK(continuation_welfare(kHalf, 0.2, 2.0) == doctest::Approx(2.0));
    CHECK(continuation_welfare(kHalf, 0.8, 0.1) == doctest::Approx(-0.18));
    CHECK(continuation_welfare(kHalf, 0.25, 1.0) == doctest::Approx(0.49875).epsilon(1e-12));
    CHECK_THROWS_AS(continuation_welfare(kHalf, 1.2, 1.0), DomainError);
}
