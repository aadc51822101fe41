#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// closed-form solvers; quantities are rebuilt from their definitions.

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

/// Root of a monotone f on [lo, hi] by plain bisection (f(lo), f(hi) of opposite sign).
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int steps = 200) {
    const double f_lo = f(lo);
    for (int i = 0; i < steps && hi - lo > 0.0; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if ((fm > 0.0) == (f_lo > 0.0)) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Length of [a, b] ∩ (-inf, c].
inline double overlap_below(double a, double b, double c) {
    return std::max(0.0, std::min(b, c) - a);
}

/// Fraction of noise eps ~ U[-sigma, sigma] with theta + eps <= x.
inline double attack_share(double sigma, double x, double theta) {
    return overlap_below(theta - sigma, theta + sigma, x) / (2.0 * sigma);
}

/// Posterior Pr{theta <= cut | x} under the flat prior.
inline double posterior_below(double sigma, double cut, double x) {
    return overlap_below(x - sigma, x + sigma, cut) / (2.0 * sigma);
}

/// sup{theta in [0,1] : attack_share(theta) >= theta}, by bisection.
inline double fall_threshold(double sigma, double x) {
    auto g = [&](double t) { return attack_share(sigma, x, t) - t; };
    if (g(1.0) >= 0.0) return 1.0;
    if (g(0.0) <= 0.0) return 0.0;
    return bisect(g, 0.0, 1.0);
}

/// Equilibrium cutoff by nested bisection: the x at which an agent is
/// indifferent when everyone uses x itself.
inline double equilibrium_cutoff(double sigma, double r) {
    auto g = [&](double x) { return posterior_below(sigma, fall_threshold(sigma, x), x) - r; };
    return bisect(g, -sigma - 1.0, 2.0 + sigma);
}

/// Central difference of f at x.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
