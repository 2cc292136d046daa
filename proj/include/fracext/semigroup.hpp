#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"
#include "field.hpp"
#include "kernels.hpp"
#include "order.hpp"
#include "quadrature.hpp"

namespace fracext {

enum class OperatorKind { Laplacian, Hermite };

inline std::string kind_name(OperatorKind k) { return k == OperatorKind::Laplacian ? "laplacian" : "hermite"; }

inline OperatorKind parse_kind(const std::string& s) {
    if (s == "laplacian") return OperatorKind::Laplacian;
    if (s == "hermite") return OperatorKind::Hermite;
    throw UsageError("unknown operator kind '" + s + "' (expected laplacian or hermite)");
}

/// Tolerances for operator values built from nested quadratures.
inline QuadratureSpec operator_spec() { return QuadratureSpec{1e-11, 1e-9, 9, 0.5}; }

namespace detail {

// e^{-tH} f(x) = e^{-tH}1(x) E[f(c + W)] with c = x (1-s^2)/(1+s^2) and W ~ N(0, 2s/(1+s^2)).
struct MehlerShift {
    Point center;
    double var;
    double log_mass;        // log e^{-tH}1(x)
    double one_minus_mass;  // e^{-tH}1(x) - 1
};

inline MehlerShift mehler_shift(double s, double one_minus_s, const Point& x) {
    const double q = 1.0 + s * s;
    const double shrink = one_minus_s * (1.0 + s) / q;
    const double lm = heat_on_one_log_s(s, one_minus_s, x.norm2(), x.dim);
    return {shrink * x, 2.0 * s / q, lm, std::expm1(lm)};
}

} // namespace detail

/** @brief e^{-tL} f(x) for L = -Lap (Gauss-Weierstrass) or L = H (Mehler), at s = tanh t. */
inline double heat_semigroup_s(const ScalarField& f, const Point& x, double t, double s, double one_minus_s,
                               OperatorKind kind, double tol = 1e-13) {
    if (kind == OperatorKind::Laplacian) return gaussian_mean(f, x, 2.0 * t, false, tol);
    if (one_minus_s <= 0.0) return 0.0;
    const auto m = detail::mehler_shift(s, one_minus_s, x);
    return std::exp(m.log_mass) * gaussian_mean(f, m.center, m.var, false, tol);
}

inline double heat_semigroup(const ScalarField& f, const Point& x, double t, OperatorKind kind, double tol = 1e-13) {
    if (!(t > 0.0)) throw DomainError("heat_semigroup: t must be positive");
    if (x.dim != f.dim) throw DomainError("heat_semigroup: dimension mismatch");
    const auto [s, oms] = tanh_pair(t);
    return heat_semigroup_s(f, x, t, s, oms, kind, tol);
}

/** @brief e^{-tL} f(x) - f(x), arranged so that the O(t) difference keeps its relative accuracy. */
inline double heat_increment_s(const ScalarField& f, const Point& x, double t, double s, double one_minus_s,
                               OperatorKind kind, double tol = 1e-13) {
    if (kind == OperatorKind::Laplacian) return gaussian_mean(f, x, 2.0 * t, true, tol);
    if (one_minus_s <= 0.0) return -f(x);
    const auto m = detail::mehler_shift(s, one_minus_s, x);
    const double fc = f(m.center);
    const double g = gaussian_mean(f, m.center, m.var, true, tol);
    return std::exp(m.log_mass) * g + m.one_minus_mass * fc + (fc - f(x));
}

inline double heat_increment(const ScalarField& f, const Point& x, double t, OperatorKind kind, double tol = 1e-13) {
    if (!(t > 0.0)) throw DomainError("heat_increment: t must be positive");
    const auto [s, oms] = tanh_pair(t);
    return heat_increment_s(f, x, t, s, oms, kind, tol);
}

/** @brief L f(x) with the Laplacian from Richardson-extrapolated spherical means. */
inline double generator_apply(const ScalarField& f, const Point& x, OperatorKind kind) {
    const double lap = laplacian_estimate(f, x, 1e-2 * f.length_scale);
    if (kind == OperatorKind::Laplacian) return -lap;
    return -lap + x.norm2() * f(x);
}

/**
 * @brief int_0^inf (e^{-tL} f(x) - f(x)) t^{-1-sigma} dt in the s-domain.
 *
 * Below t0 = 1e-8 l^2 the increment is replaced by its first-order term -t L f(x).
 */
inline double heat_route_integral(const ScalarField& f, const Point& x, const FracOrder& order, OperatorKind kind,
                                  const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (!f.decay.in_l_sigma(order.sigma())) throw DomainError("field is not in the admissible weighted L^1 class");
    const double sigma = order.sigma();
    const double ell = f.length_scale;
    const double t0 = 1e-8 * ell * ell;
    MedaOptions opt;
    opt.s_min = std::tanh(t0);
    for (double t : {ell * ell, 0.25 * ell * ell})
        if (std::tanh(t) > 4.0 * opt.s_min) opt.splits.push_back(std::tanh(t));
    const double taylor = -generator_apply(f, x, kind) * std::pow(t0, 1.0 - sigma) / (1.0 - sigma);
    const double body = integrate_meda(
        [&](const MedaPoint& mp) { return heat_increment_s(f, x, mp.t, mp.s, mp.one_minus_s, kind); }, order, spec,
        opt);
    return taylor + body;
}

} // namespace fracext
