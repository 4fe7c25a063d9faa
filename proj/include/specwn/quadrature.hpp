#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "specwn/errors.hpp"

namespace specwn {

/// Tolerances for adaptive time quadrature.
struct QuadSetting {
    double abs_tol = 1e-11;
    int max_depth = 30;
};

namespace detail {

// 4-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr std::array<double, 4> gl4_x = {
    -0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
inline constexpr std::array<double, 4> gl4_w = {
    0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};

template <typename F>
std::complex<double> gl4_panel(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < 4; ++i) acc += gl4_w[i] * f(mid + half * gl4_x[i]);
    return half * acc;
}

template <typename F>
std::complex<double> adaptive_rec(const F& f, double a, double b, std::complex<double> whole,
                                  double tol, int depth, int max_depth) {
    const double mid = 0.5 * (a + b);
    const std::complex<double> left = gl4_panel(f, a, mid);
    const std::complex<double> right = gl4_panel(f, mid, b);
    const std::complex<double> refined = left + right;
    if (std::abs(refined - whole) <= tol) return refined;
    if (depth >= max_depth)
        throw quadrature_failure("adaptive rule did not converge on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "]");
    return adaptive_rec(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_rec(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace detail

/// Adaptive composite Gauss-Legendre(4) with interval bisection.
template <typename F>
std::complex<double> integrate_adaptive(const F& f, double a, double b, const QuadSetting& quad = {}) {
    if (a == b) return 0.0;
    return detail::adaptive_rec(f, a, b, detail::gl4_panel(f, a, b), quad.abs_tol, 0, quad.max_depth);
}

/// Real-valued convenience wrapper.
template <typename F>
double integrate_adaptive_real(const F& f, double a, double b, const QuadSetting& quad = {}) {
    return integrate_adaptive([&](double x) { return std::complex<double>(f(x), 0.0); }, a, b, quad).real();
}

} // namespace specwn
