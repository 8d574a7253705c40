// Test-only analytic knife-edge reference, independent of the solver
// code paths: Fresnel integrals by adaptive Simpson quadrature.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

namespace detail {

template <typename F>
double adaptive_simpson(F f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = (a + b) / 2.0;
    const double lm = (a + m) / 2.0;
    const double rm = (m + b) / 2.0;
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double integrate(F f, double a, double b, double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f((a + b) / 2.0);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace detail

/// Fresnel cosine integral C(x) = int_0^x cos(pi t^2 / 2) dt.
inline double fresnel_c(double x) {
    if (x < 0.0)
        return -fresnel_c(-x);
    double acc = 0.0;
    // piecewise to keep the oscillatory integrand tame
    for (double a = 0.0; a < x; a += 1.0) {
        const double b = std::min(a + 1.0, x);
        acc += detail::integrate(
            [](double t) { return std::cos(std::numbers::pi * t * t / 2.0); }, a, b, 1e-13);
    }
    return acc;
}

/// Fresnel sine integral S(x) = int_0^x sin(pi t^2 / 2) dt.
inline double fresnel_s(double x) {
    if (x < 0.0)
        return -fresnel_s(-x);
    double acc = 0.0;
    for (double a = 0.0; a < x; a += 1.0) {
        const double b = std::min(a + 1.0, x);
        acc += detail::integrate(
            [](double t) { return std::sin(std::numbers::pi * t * t / 2.0); }, a, b, 1e-13);
    }
    return acc;
}

/// Field ratio behind an absorbing half plane,
///   F(nu) = (1+j)/2 * int_nu^inf e^{-j pi t^2/2} dt,
/// nu > 0 in shadow. F(0) = 1/2.
inline std::complex<double> knife_edge_ratio(double nu) {
    const std::complex<double> tail(0.5 - fresnel_c(nu), -(0.5 - fresnel_s(nu)));
    return std::complex<double>(0.5, 0.5) * tail;
}

/// Diffraction loss in dB (positive = attenuation).
inline double knife_edge_loss_db(double nu) {
    return -20.0 * std::log10(std::abs(knife_edge_ratio(nu)));
}

/// Fresnel diffraction parameter for an edge a transverse distance
/// `clearance` from the direct ray (positive = ray blocked), with
/// source-edge distance d1 and edge-receiver distance d2.
inline double knife_edge_nu(double clearance, double d1, double d2, double lambda) {
    return clearance * std::sqrt(2.0 * (d1 + d2) / (lambda * d1 * d2));
}

} // namespace oracle
