#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "order.hpp"
#include "rules.hpp"

namespace fracext {

/** @brief Extra control over an s-domain integral: a lower cutoff and interior breakpoints. */
struct MedaOptions {
    double s_min = 0.0;
    std::vector<double> splits;
};

namespace detail {

// w * g formed as sign(g) e^{log w + log|g|}, so neither factor overflows on its own.
inline double scaled_product(double log_weight, double g) {
    if (g == 0.0 || !std::isfinite(g)) return g;
    return std::copysign(std::exp(log_weight + std::log(std::fabs(g))), g);
}

template <size_t K>
std::array<double, K> scaled_product(double log_weight, const std::array<double, K>& g) {
    std::array<double, K> out;
    for (size_t i = 0; i < K; ++i) out[i] = scaled_product(log_weight, g[i]);
    return out;
}

} // namespace detail

/**
 * @brief int_{s_min}^1 g(s) dmu_sigma(s) with dmu_sigma = ds / ((1-s^2) t(s)^{1+sigma}).
 *
 * (s_min, split] is integrated in s (in log s on wide subintervals); [split, 1) is integrated
 * in v = t(split)/t(s), where the measure becomes t(split)^{-sigma} v^{sigma-1} dv and the
 * behaviour at s -> 1 turns into an integrable endpoint singularity at v = 0.
 * The integrand receives a MedaPoint carrying s, t and an accurate 1-s.
 */
template <typename V, typename G>
QuadResult<V> integrate_meda_result(G&& g, const FracOrder& order, const QuadratureSpec& spec,
                                    const MedaOptions& opt = {}) {
    spec.validate();
    const double sigma = order.sigma();
    const double split = spec.split_point;
    QuadResult<V> res;
    if (opt.s_min < split) {
        std::vector<double> br{opt.s_min};
        std::vector<double> extra = opt.splits;
        std::sort(extra.begin(), extra.end());
        for (double s : extra)
            if (s > br.back() * 1.0000001 && s < split * 0.999) br.push_back(s);
        br.push_back(split);
        for (size_t k = 0; k + 1 < br.size(); ++k) {
            const double a = br[k], b = br[k + 1];
            if (a > 0.0 && b / a > 4.0) {
                res += tanh_sinh<V>(
                    [&](double u, double, double) {
                        const double s = std::exp(u);
                        const MedaPoint mp = meda_map(s, 1.0 - s, order);
                        return detail::scaled_product(mp.log_density + u, g(mp));
                    },
                    std::log(a), std::log(b), spec.abs_tol, spec.rel_tol, spec.max_levels);
            } else {
                res += tanh_sinh<V>(
                    [&](double s, double, double) {
                        const MedaPoint mp = meda_map(s, 1.0 - s, order);
                        return detail::scaled_product(mp.log_density, g(mp));
                    },
                    a, b, spec.abs_tol, spec.rel_tol, spec.max_levels);
            }
        }
    }
    const double s1 = std::max(split, opt.s_min);
    const double t1 = meda_t(s1, 1.0 - s1);
    const double scale = std::pow(t1, -sigma);
    res += tanh_sinh<V>(
        [&](double v, double, double) {
            const double t = t1 / v;
            // the remaining mass of v^{sigma-1} dv below t ~ 1e300 is negligible
            if (!(t < 1e300)) return V{};
            const double e = std::exp(-2.0 * t);
            const double oms = 2.0 * e / (1.0 + e);
            MedaPoint mp{1.0 - oms, t, 0.0, oms, -std::numeric_limits<double>::infinity()};
            if (oms > 0.0) {
                mp.log_density = -(std::log(oms) + std::log(2.0 - oms) + (1.0 + sigma) * std::log(t));
                mp.mu_density = std::exp(mp.log_density);
            }
            return (scale * std::pow(v, sigma - 1.0)) * g(mp);
        },
        0.0, 1.0, spec.abs_tol, spec.rel_tol, spec.max_levels);
    return res;
}

/** @brief Scalar s-domain integral; throws AccuracyError when the refinement budget runs out. */
template <typename G>
double integrate_meda(G&& g, const FracOrder& order, const QuadratureSpec& spec = {}, const MedaOptions& opt = {}) {
    auto r = integrate_meda_result<double>(g, order, spec, opt);
    if (!r.converged) throw AccuracyError("integrate_meda did not converge", r.value, r.error);
    return r.value;
}

/**
 * @brief int_0^inf (4 pi t)^{-n/2} e^{-(rho^2+y^2)/4t} t^{-1-sigma} dt in closed form,
 * 4^sigma Gamma(n/2+sigma) pi^{-n/2} (rho^2+y^2)^{-(n+2sigma)/2}.
 */
inline double integrate_subordinator(double rho, double y, const FracOrder& order, int n) {
    Point::check_dim(n);
    const double r2 = rho * rho + y * y;
    if (!(r2 > 0.0)) throw SingularityError("integrate_subordinator: rho = y = 0");
    const double s = order.sigma();
    return std::pow(4.0, s) * gamma(0.5 * n + s) / std::pow(kPi, 0.5 * n) * std::pow(r2, -0.5 * (n + 2 * s));
}

/// Verification mode: the same subordination integral by direct quadrature in t.
inline double integrate_subordinator_numeric(double rho, double y, const FracOrder& order, int n,
                                             const QuadratureSpec& spec = {}) {
    Point::check_dim(n);
    const double r2 = rho * rho + y * y;
    if (!(r2 > 0.0)) throw SingularityError("integrate_subordinator: rho = y = 0");
    const double s = order.sigma();
    auto f = [&](double t) {
        if (!(t > 0.0)) return 0.0;
        return std::exp(-0.5 * n * std::log(4 * kPi * t) - r2 / (4 * t) - (1 + s) * std::log(t));
    };
    auto r = integrate_halfline<double>(f, 0.0, r2, spec.abs_tol, spec.rel_tol, spec.max_levels);
    if (!r.converged) throw AccuracyError("subordinator quadrature did not converge", r.value, r.error);
    return r.value;
}

namespace detail {

// Inner radius below which singular radial integrals are replaced by their Taylor term.
inline double taylor_radius(const ScalarField& f, double delta) {
    return std::min(1e-3 * f.length_scale, 0.5 * delta);
}

} // namespace detail

/**
 * @brief int_{|h|<delta} (2f(x) - f(x+h) - f(x-h)) / (2|h|^{n+2sigma}) dh.
 *
 * In polar form this is |S| int_0^delta (f(x) - M(r)) r^{-1-2sigma} dr with M the spherical mean.
 * Below a tiny radius the integrand is replaced by its leading Taylor term -r^{1-2sigma} Lap f/(2n).
 */
inline double principal_value_ball(const ScalarField& f, const Point& x, double delta, const FracOrder& order,
                                   const QuadratureSpec& spec = {}) {
    if (!(delta > 0.0)) throw DomainError("principal_value_ball: delta must be positive");
    if (x.dim != f.dim) throw DomainError("principal_value_ball: dimension mismatch");
    if (!f.smooth.covers_ball(x, delta)) throw PreconditionError("field is not C^2 on the ball around x");
    const int n = f.dim;
    const double s2 = 2.0 * order.sigma();
    const double fx = f(x);
    const double rmin = detail::taylor_radius(f, delta);
    const double lap = laplacian_estimate(f, x, 10.0 * rmin);
    double inner = -lap / (2.0 * n) * std::pow(rmin, 2.0 - s2) / (2.0 - s2);
    auto q = tanh_sinh<double>(
        [&](double r, double, double) { return (fx - sphere_mean(f, x, r)) * std::pow(r, -1.0 - s2); }, rmin, delta,
        spec.abs_tol, spec.rel_tol, spec.max_levels);
    if (!q.converged) throw AccuracyError("principal_value_ball did not converge", q.value, q.error);
    return sphere_area(n) * (inner + q.value);
}

/**
 * @brief int_{|h|>delta} (f(x) - f(x+h)) |h|^{-n-2sigma} dh by polar quadrature.
 *
 * The radial integral runs over geometric panels up to where the declared decay bound makes
 * the remainder negligible; fields without such a radius get a v = R/r map for the tail.
 */
inline double exterior_integral(const ScalarField& f, const Point& x, double delta, const FracOrder& order,
                                const QuadratureSpec& spec = {}) {
    if (!(delta > 0.0)) throw DomainError("exterior_integral: delta must be positive");
    const int n = f.dim;
    const double s2 = 2.0 * order.sigma();
    const double fx = f(x);
    const double xn = x.norm();
    const double rtrunc = xn + f.decay.truncation_radius(spec.abs_tol * order.sigma() * 0.1);
    const double rcap = std::min(rtrunc, std::max(64.0 * f.length_scale, 4.0 * xn + 64.0));
    double ext = 0.0;
    if (rcap > delta) {
        const auto br = geometric_breakpoints(delta, rcap, f.length_scale);
        for (size_t k = 0; k + 1 < br.size(); ++k) {
            auto q = gauss_legendre_adaptive<double>(
                [&](double r) { return sphere_mean(f, x, r) * std::pow(r, -1.0 - s2); }, br[k], br[k + 1],
                spec.abs_tol * 0.1, spec.rel_tol, 14);
            if (!q.converged) throw AccuracyError("exterior radial panel did not converge", q.value, q.error);
            ext += q.value;
        }
    }
    if (rtrunc > rcap) {
        const double R = std::max(rcap, delta);
        auto q = tanh_sinh<double>(
            [&](double v, double, double) {
                return sphere_mean(f, x, R / v) * std::pow(v, s2 - 1.0) * std::pow(R, -s2);
            },
            0.0, 1.0, spec.abs_tol, spec.rel_tol, spec.max_levels);
        if (!q.converged) throw AccuracyError("exterior tail did not converge", q.value, q.error);
        ext += q.value;
    }
    return sphere_area(n) * (fx * std::pow(delta, -s2) / s2 - ext);
}

} // namespace fracext
