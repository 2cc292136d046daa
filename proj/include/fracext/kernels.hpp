#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "order.hpp"
#include "point.hpp"
#include "quadrature.hpp"

namespace fracext {

/** @brief Gauss-Weierstrass kernel W_t(x-z) = (4 pi t)^{-n/2} e^{-|x-z|^2/4t}. */
inline double gauss_heat_kernel(double t, const Point& x, const Point& z, int n) {
    if (!(t > 0.0)) throw DomainError("gauss_heat_kernel: t must be positive");
    if (x.dim != n || z.dim != n) throw DomainError("gauss_heat_kernel: dimension mismatch");
    return std::pow(4.0 * kPi * t, -0.5 * n) * std::exp(-dist2(x, z) / (4.0 * t));
}

/// log((1-s^2)/(4 pi s)) from s and 1-s, finite for denormal s.
inline double mehler_log_prefactor(double s, double one_minus_s) {
    return std::log(one_minus_s) + std::log1p(s) - std::log(4.0 * kPi) - std::log(s);
}

/// tanh(t) and 1 - tanh(t) without cancellation or overflow.
inline std::array<double, 2> tanh_pair(double t) {
    const double e = std::exp(-2.0 * t);
    return {std::tanh(t), 2.0 * e / (1.0 + e)};
}

/**
 * @brief Mehler kernel in the variable s = tanh t:
 * ((1-s^2)/(4 pi s))^{n/2} exp(-(s|x+z|^2 + |x-z|^2/s)/4), evaluated in log form.
 */
inline double mehler_kernel_s(double s, double one_minus_s, const Point& x, const Point& z) {
    const int n = x.dim;
    double sum2 = 0.0, diff2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = x[i] + z[i], b = x[i] - z[i];
        sum2 += a * a;
        diff2 += b * b;
    }
    const double logpre = 0.5 * n * mehler_log_prefactor(s, one_minus_s);
    return std::exp(logpre - 0.25 * (s * sum2 + diff2 / s));
}

/** @brief Heat kernel of H = -Lap + |x|^2 at time t. */
inline double mehler_kernel(double t, const Point& x, const Point& z) {
    if (!(t > 0.0)) throw DomainError("mehler_kernel: t must be positive");
    if (x.dim != z.dim) throw DomainError("mehler_kernel: dimension mismatch");
    const auto [s, oms] = tanh_pair(t);
    return mehler_kernel_s(s, oms, x, z);
}

/// log e^{-tH}1(x) in the variable s: (n/2) log((1-s^2)/(1+s^2)) - s|x|^2/(1+s^2).
inline double heat_on_one_log_s(double s, double one_minus_s, double r2, int n) {
    if (one_minus_s <= 0.0) return -std::numeric_limits<double>::infinity();
    // log(1 - s^2) must stay accurate as s -> 0, where the result is O(s^2)
    const double log_1ms2 = s < 0.5 ? std::log1p(-s * s) : std::log(one_minus_s) + std::log1p(s);
    return 0.5 * n * (log_1ms2 - std::log1p(s * s)) - s * r2 / (1.0 + s * s);
}

/// e^{-tH}1(x) - 1 in the variable s, via expm1.
inline double heat_on_one_minus_one_s(double s, double one_minus_s, double r2, int n) {
    if (one_minus_s <= 0.0) return -1.0;
    return std::expm1(heat_on_one_log_s(s, one_minus_s, r2, n));
}

/** @brief e^{-tH}1(x) = (cosh 2t)^{-n/2} e^{-(tanh 2t / 2)|x|^2}. */
inline double heat_on_one(double t, const Point& x, int n) {
    if (!(t > 0.0)) throw DomainError("heat_on_one: t must be positive");
    if (x.dim != n) throw DomainError("heat_on_one: dimension mismatch");
    const auto [s, oms] = tanh_pair(t);
    return std::exp(heat_on_one_log_s(s, oms, x.norm2(), n));
}

/// Location of the peak of s^{-n/2-1-sigma} e^{-d2/4s}, used as a breakpoint.
inline double kernel_peak_s(double d2, int n, double sigma) { return d2 / (2.0 * n + 4.0 + 4.0 * sigma); }

/**
 * @brief Symmetric and antisymmetric parts of F_sigma(x, x+h) and F_sigma(x, x-h).
 *
 * Returns {(F(x,x+h) + F(x,x-h))/2, (F(x,x+h) - F(x,x-h))/2}. The difference is formed inside
 * the integrand with expm1, so it stays accurate when h is small.
 */
inline std::array<double, 2> f_sigma_pair(const Point& x, const Point& h, const FracOrder& order,
                                          const QuadratureSpec& spec = {}) {
    const int n = x.dim;
    const double h2 = h.norm2();
    if (!(h2 > 0.0)) throw SingularityError("f_sigma_kernel: x = z");
    double a2 = 0.0, b2 = 0.0, xh = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * x[i] + h[i], b = 2 * x[i] - h[i];
        a2 += a * a;
        b2 += b * b;
        xh += x[i] * h[i];
    }
    MedaOptions opt;
    const double peak = kernel_peak_s(h2, n, order.sigma());
    if (peak < 0.25 * spec.split_point) opt.splits.push_back(peak);
    auto res = integrate_meda_result<std::array<double, 2>>(
        [&](const MedaPoint& mp) -> std::array<double, 2> {
            const double s = mp.s;
            if (mp.one_minus_s <= 0.0) return {0.0, 0.0};
            const double base = 0.5 * n * mehler_log_prefactor(s, mp.one_minus_s) - h2 / (4.0 * s);
            const double eb = std::exp(base - 0.25 * s * b2);
            const double ea = std::exp(base - 0.25 * s * a2);
            // ea - eb = eb * expm1(-s (a2 - b2)/4) with a2 - b2 = 8 x.h
            return {0.5 * (ea + eb), 0.5 * eb * std::expm1(-2.0 * s * xh)};
        },
        order, spec, opt);
    if (!res.converged) throw AccuracyError("f_sigma_kernel quadrature did not converge", res.value[0], res.error);
    const double c = -1.0 / order.gamma_minus_sigma();
    return {c * res.value[0], c * res.value[1]};
}

/** @brief F_sigma(x,z) = (1/-Gamma(-sigma)) int_0^1 G_{t(s)}(x,z) dmu_sigma(s), x != z. */
inline double f_sigma_kernel(const Point& x, const Point& z, const FracOrder& order, const QuadratureSpec& spec = {}) {
    if (x.dim != z.dim) throw DomainError("f_sigma_kernel: dimension mismatch");
    const int n = x.dim;
    const double d2 = dist2(x, z);
    if (!(d2 > 0.0)) throw SingularityError("f_sigma_kernel: x = z");
    // below this separation F equals c_{n,sigma} |x-z|^{-n-2sigma} to relative O(|x-z|^2 (1+|x|^2))
    if (d2 < 1e-60 && d2 * (1.0 + x.norm2()) < 1e-40)
        return order.lap_const(n) * std::pow(d2, -0.5 * n - order.sigma());
    MedaOptions opt;
    const double peak = kernel_peak_s(d2, n, order.sigma());
    if (peak < 0.25 * spec.split_point) opt.splits.push_back(peak);
    auto res = integrate_meda_result<double>(
        [&](const MedaPoint& mp) { return mp.one_minus_s > 0.0 ? mehler_kernel_s(mp.s, mp.one_minus_s, x, z) : 0.0; },
        order, spec, opt);
    if (!res.converged) throw AccuracyError("f_sigma_kernel quadrature did not converge", res.value, res.error);
    return -res.value / order.gamma_minus_sigma();
}

/** @brief B_sigma(x) = (1/Gamma(-sigma)) int_0^1 (e^{-t(s)H}1(x) - 1) dmu_sigma(s) >= 0. */
inline double b_sigma(const Point& x, const FracOrder& order, int n, const QuadratureSpec& spec = {}) {
    if (x.dim != n) throw DomainError("b_sigma: dimension mismatch");
    const double r2 = x.norm2();
    MedaOptions opt;
    if (r2 > 0.0 && 1.0 / r2 < 0.25 * spec.split_point) opt.splits.push_back(1.0 / r2);
    auto res = integrate_meda_result<double>(
        [&](const MedaPoint& mp) { return heat_on_one_minus_one_s(mp.s, mp.one_minus_s, r2, n); }, order, spec, opt);
    if (!res.converged) throw AccuracyError("b_sigma quadrature did not converge", res.value, res.error);
    return res.value / order.gamma_minus_sigma();
}

} // namespace fracext
