#pragma once

// Quadrature rules on the unit circle and the unit interval.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace slicereg {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]. Roots of P_n by Newton iteration
/// starting from the Chebyshev-like initial guesses.
inline GaussRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const auto nd = static_cast<double>(n);
    for (std::size_t k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Three-term recurrence for P_n and P_{n-1}.
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t m = 2; m <= n; ++m) {
                const auto md = static_cast<double>(m);
                const double p2 = ((2.0 * md - 1.0) * x * p1 - (md - 1.0) * p0) / md;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged root for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t m = 2; m <= n; ++m) {
            const auto md = static_cast<double>(m);
            const double p2 = ((2.0 * md - 1.0) * x * p1 - (md - 1.0) * p0) / md;
            p0 = p1;
            p1 = p2;
        }
        dp = nd * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[k] = mid - half * x;
        rule.nodes[n - 1 - k] = mid + half * x;
        rule.weights[k] = half * w;
        rule.weights[n - 1 - k] = half * w;
    }
    return rule;
}

/// Equispaced angles 2 pi m / n, m = 0..n-1 (trapezoid rule on the circle).
inline std::vector<double> circle_angles(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t m = 0; m < n; ++m)
        t[m] = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return t;
}

}  // namespace slicereg
