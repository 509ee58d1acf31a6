#pragma once

// Adaptive 16-node Gauss-Legendre panels with a fixed, deterministic
// subdivision order: results do not depend on evaluation scheduling.

#include <array>
#include <cmath>

#include "hyphull/errors.hpp"

namespace hyphull {

struct QuadratureSpec {
    double abs_tol = 1e-9;
    int max_panels = 4096;
};

namespace detail {

// Abscissae/weights for 16-point Gauss-Legendre on [-1, 1] (positive half).
inline constexpr std::array<double, 8> kGl16X = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr std::array<double, 8> kGl16W = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <typename F>
double gl16(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kGl16X[static_cast<std::size_t>(i)];
        sum += kGl16W[static_cast<std::size_t>(i)] * (f(c - dx) + f(c + dx));
    }
    return h * sum;
}

template <typename F>
double adaptive_gl16_rec(const F& f, double a, double b, double tol, double whole, int& panels_left,
                         int depth) {
    if (panels_left <= 0) throw ToleranceNotMet("adaptive quadrature: panel budget exhausted");
    const double m = 0.5 * (a + b);
    panels_left -= 2;
    const double left = gl16(f, a, m);
    const double right = gl16(f, m, b);
    const double split = left + right;
    if (std::abs(split - whole) <= tol || depth >= 48) return split;
    return adaptive_gl16_rec(f, a, m, 0.5 * tol, left, panels_left, depth + 1) +
           adaptive_gl16_rec(f, m, b, 0.5 * tol, right, panels_left, depth + 1);
}

/// Integrate f over [a, b] to absolute tolerance tol, drawing panels from the
/// shared budget panels_left. Throws ToleranceNotMet when the budget runs out.
template <typename F>
double adaptive_gl16(const F& f, double a, double b, double tol, int& panels_left) {
    if (a == b) return 0.0;
    if (panels_left <= 0) throw ToleranceNotMet("adaptive quadrature: panel budget exhausted");
    panels_left -= 1;
    const double whole = gl16(f, a, b);
    return adaptive_gl16_rec(f, a, b, tol, whole, panels_left, 0);
}

}  // namespace detail

}  // namespace hyphull
