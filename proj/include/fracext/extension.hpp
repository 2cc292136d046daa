#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "kernels.hpp"
#include "order.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "semigroup.hpp"
#include "specfun.hpp"

namespace fracext {

/**
 * @brief u(x,y) = (1/Gamma(sigma)) int_0^inf e^{-(y^2/4r) L} f(x) e^{-r} r^{sigma-1} dr.
 *
 * The integrand is bounded by sup|f| e^{-r} r^{sigma-1}, so no singular subtraction is needed.
 */
inline double poisson_extend(const ScalarField& f, const Point& x, double y, const FracOrder& order,
                             OperatorKind kind, const QuadratureSpec& spec = operator_spec()) {
    if (!(y > 0.0)) throw DomainError("poisson_extend: y must be positive");
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    const double sigma = order.sigma();
    auto integrand = [&](double r) {
        if (!(r > 0.0)) return 0.0;
        const double w = std::exp(-r + (sigma - 1.0) * std::log(r));
        if (w == 0.0) return 0.0;
        return w * heat_semigroup(f, x, y * y / (4.0 * r), kind);
    };
    auto q = integrate_halfline<double>(integrand, 0.0, 1.0, spec.abs_tol, spec.rel_tol, spec.max_levels);
    if (!q.converged) throw AccuracyError("poisson_extend did not converge", q.value, q.error);
    return q.value / order.gamma_sigma();
}

/** @brief P_y(x,z) = Gamma(n/2+sigma)/(pi^{n/2} Gamma(sigma)) y^{2sigma} (|x-z|^2+y^2)^{-(n+2sigma)/2}. */
inline double poisson_kernel_laplacian(const Point& x, const Point& z, double y, const FracOrder& order, int n) {
    if (!(y > 0.0)) throw DomainError("poisson_kernel_laplacian: y must be positive");
    if (x.dim != n || z.dim != n) throw DomainError("poisson_kernel_laplacian: dimension mismatch");
    const double s = order.sigma();
    const double c = gamma(0.5 * n + s) / (std::pow(kPi, 0.5 * n) * order.gamma_sigma());
    return c * std::pow(y, 2.0 * s) * std::pow(dist2(x, z) + y * y, -0.5 * (n + 2.0 * s));
}

/**
 * @brief P_y(x,z) = (y^{2sigma}/(4^sigma Gamma(sigma))) int_0^inf K_t(x,z) e^{-y^2/4t} t^{-1-sigma} dt.
 *
 * K_t is the Gauss-Weierstrass kernel for -Lap (closed form) or the Mehler kernel for H.
 */
inline double poisson_kernel(const Point& x, const Point& z, double y, const FracOrder& order, OperatorKind kind,
                             const QuadratureSpec& spec = QuadratureSpec{}) {
    if (!(y > 0.0)) throw DomainError("poisson_kernel: y must be positive");
    if (x.dim != z.dim) throw DomainError("poisson_kernel: dimension mismatch");
    const int n = x.dim;
    if (kind == OperatorKind::Laplacian) return poisson_kernel_laplacian(x, z, y, order, n);
    const double s = order.sigma();
    const double d2 = dist2(x, z);
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) sum2 += (x[i] + z[i]) * (x[i] + z[i]);
    MedaOptions opt;
    const double peak = kernel_peak_s(d2 + y * y, n, s);
    if (peak < 0.25 * spec.split_point) opt.splits.push_back(peak);
    auto res = integrate_meda_result<double>(
        [&](const MedaPoint& mp) {
            if (mp.one_minus_s <= 0.0) return 0.0;
            return std::exp(0.5 * n * mehler_log_prefactor(mp.s, mp.one_minus_s) -
                            0.25 * (mp.s * sum2 + d2 / mp.s) - y * y / (4.0 * mp.t));
        },
        order, spec, opt);
    if (!res.converged) throw AccuracyError("poisson_kernel quadrature did not converge", res.value, res.error);
    return std::pow(y, 2.0 * s) * res.value / order.norm_const();
}

/// (2^{1-sigma}/Gamma(sigma)) z^sigma K_sigma(z), the factor taking <f,h_alpha> to c_alpha(y).
inline double bessel_profile(double z, const FracOrder& order) {
    const double s = order.sigma();
    return std::pow(2.0, 1.0 - s) / order.gamma_sigma() * std::pow(z, s) * bessel_k(s, z);
}

/** @brief c_alpha(y) = (2^{1-sigma}/Gamma(sigma)) (lambda^{1/2} y)^sigma K_sigma(lambda^{1/2} y) <f,h_alpha>. */
inline HermiteExpansion spectral_extension(const HermiteExpansion& e, double y, const FracOrder& order) {
    if (!(y > 0.0)) throw DomainError("spectral_extension: y must be positive");
    HermiteExpansion out = e;
    for (auto& [alpha, c] : out.coeffs) c *= bessel_profile(std::sqrt(alpha.eigenvalue()) * y, order);
    return out;
}

/** @brief y^{1-2sigma} d/dy of the spectral extension, coefficient-wise, via K_{1-sigma}. */
inline HermiteExpansion spectral_extension_flux(const HermiteExpansion& e, double y, const FracOrder& order) {
    if (!(y > 0.0)) throw DomainError("spectral_extension_flux: y must be positive");
    const double s = order.sigma();
    HermiteExpansion out = e;
    for (auto& [alpha, c] : out.coeffs) {
        const double lambda = alpha.eigenvalue();
        const double z = std::sqrt(lambda) * y;
        c *= -std::pow(2.0, 1.0 - s) / order.gamma_sigma() * std::pow(lambda, s) * std::pow(z, 1.0 - s) *
             bessel_k(1.0 - s, z);
    }
    return out;
}

enum class TraceRoute { Integral, Regression };

inline std::string route_name(TraceRoute r) { return r == TraceRoute::Integral ? "integral" : "regression"; }

/** @brief (1/2sigma) lim_{y->0} y^{1-2sigma} u_y(x,y) at one point, with the route that produced it. */
struct NeumannTrace {
    Point x;
    double limit_value = 0.0;
    TraceRoute route = TraceRoute::Integral;
};

/**
 * @brief y^{1-2sigma} u_y(x,y) for a field, differentiating the t-form of the Poisson integral:
 * (1/(4^sigma Gamma(sigma))) int (e^{-tL}f(x) - f(x)) (2sigma - y^2/2t) e^{-y^2/4t} t^{-1-sigma} dt.
 */
inline double extension_flux(const ScalarField& f, const Point& x, double y, const FracOrder& order,
                             OperatorKind kind, const QuadratureSpec& spec = operator_spec()) {
    if (!(y > 0.0)) throw DomainError("extension_flux: y must be positive");
    const double sigma = order.sigma();
    const double y2 = y * y;
    MedaOptions opt;
    opt.s_min = std::tanh(y2 / 1000.0);  // e^{-y^2/4t} < e^{-250} below this
    for (double t : {y2 / 8.0, y2, 8.0 * y2, f.length_scale * f.length_scale})
        if (std::tanh(t) > 4.0 * opt.s_min) opt.splits.push_back(std::tanh(t));
    const double v = integrate_meda(
        [&](const MedaPoint& mp) {
            const double damp = std::exp(-y2 / (4.0 * mp.t));
            if (damp == 0.0) return 0.0;
            return heat_increment_s(f, x, mp.t, mp.s, mp.one_minus_s, kind) * (2.0 * sigma - y2 / (2.0 * mp.t)) *
                   damp;
        },
        order, spec, opt);
    return v / order.norm_const();
}

namespace detail {

struct LineFit {
    double intercept;
    double slope;
};

// Least squares for v ~ a + b w.
inline LineFit fit_line(const std::vector<double>& w, const std::vector<double>& v, size_t lo, size_t hi) {
    double sw = 0, sv = 0, sww = 0, swv = 0;
    const double m = static_cast<double>(hi - lo);
    for (size_t k = lo; k < hi; ++k) {
        sw += w[k];
        sv += v[k];
        sww += w[k] * w[k];
        swv += w[k] * v[k];
    }
    const double b = (m * swv - sw * sv) / (m * sww - sw * sw);
    return {(sv - b * sw) / m, b};
}

// Fits flux(y)/2sigma ~ a + b y^{2-2sigma} on y = 2^{-k}, k = 6..14 and checks that the
// intercept is stable when the finest or the coarsest sample is dropped.
template <typename Flux>
double regression_trace(Flux&& flux, const FracOrder& order) {
    const double sigma = order.sigma();
    std::vector<double> w, v;
    for (int k = 6; k <= 14; ++k) {
        const double y = std::ldexp(1.0, -k);
        w.push_back(std::pow(y, 2.0 - 2.0 * sigma));
        v.push_back(flux(y) / (2.0 * sigma));
    }
    const auto all = fit_line(w, v, 0, w.size());
    const auto coarse = fit_line(w, v, 0, w.size() - 1);
    const auto fine = fit_line(w, v, 1, w.size());
    const double spread = std::fabs(coarse.intercept - fine.intercept);
    const double scale = std::max(std::fabs(coarse.intercept), std::fabs(fine.intercept));
    if (spread > 0.05 * scale + 1e-10)
        throw AccuracyError("Neumann regression did not stabilize", all.intercept, spread);
    return all.intercept;
}

} // namespace detail

/** @brief Neumann trace of the extension of a field, by the t-integral or by regression in y. */
inline NeumannTrace neumann_trace(const ScalarField& f, const Point& x, const FracOrder& order, OperatorKind kind,
                                  TraceRoute route, const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (!f.smooth.contains(x)) throw DomainError("x lies outside the field's smooth region");
    NeumannTrace out{x, 0.0, route};
    if (route == TraceRoute::Integral) {
        out.limit_value = heat_route_integral(f, x, order, kind, spec) / order.norm_const();
    } else {
        out.limit_value =
            detail::regression_trace([&](double y) { return extension_flux(f, x, y, order, kind, spec); }, order);
    }
    return out;
}

/** @brief Neumann trace of the spectral extension of an expansion. */
inline NeumannTrace neumann_trace(const HermiteExpansion& e, const Point& x, const FracOrder& order,
                                  TraceRoute route, const QuadratureSpec& spec = QuadratureSpec{}) {
    if (x.dim != e.dim) throw DomainError("dimension mismatch between point and expansion");
    NeumannTrace out{x, 0.0, route};
    if (route == TraceRoute::Integral) {
        HermiteExpansion g = e;
        for (auto& [alpha, c] : g.coeffs) {
            const double lambda = alpha.eigenvalue();
            c *= integrate_meda([&](const MedaPoint& mp) { return std::expm1(-lambda * mp.t); }, order, spec) /
                 order.norm_const();
        }
        out.limit_value = g(x);
    } else {
        out.limit_value = detail::regression_trace(
            [&](double y) { return spectral_extension_flux(e, y, order)(x); }, order);
    }
    return out;
}

/**
 * @brief Psi(x,z,y) = (1/Gamma(sigma)) int_0^inf K_t(x,z) e^{-y^2/4t} t^{sigma-1} dt.
 *
 * For -Lap the integral is 4^{-sigma} Gamma(n/2-sigma) pi^{-n/2} (|x-z|^2+y^2)^{sigma-n/2} / Gamma(sigma),
 * finite only when n > 2 sigma. For H it is computed in the s-domain.
 */
inline double fundamental_solution(const Point& x, const Point& z, double y, const FracOrder& order,
                                   OperatorKind kind, const QuadratureSpec& spec = QuadratureSpec{}) {
    if (x.dim != z.dim) throw DomainError("fundamental_solution: dimension mismatch");
    if (y < 0.0) throw DomainError("fundamental_solution: y must be non-negative");
    const int n = x.dim;
    const double s = order.sigma();
    const double d2 = dist2(x, z);
    const double r2 = d2 + y * y;
    if (!(r2 > 0.0)) throw SingularityError("fundamental_solution: (x,y) = (z,0)");
    if (kind == OperatorKind::Laplacian) {
        if (!(n > 2.0 * s)) throw DomainError("fundamental solution of -Lap diverges unless n > 2 sigma");
        return std::pow(4.0, -s) * gamma(0.5 * n - s) / std::pow(kPi, 0.5 * n) * std::pow(r2, s - 0.5 * n) /
               order.gamma_sigma();
    }
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) sum2 += (x[i] + z[i]) * (x[i] + z[i]);
    MedaOptions opt;
    const double peak = kernel_peak_s(r2, n, -s);
    if (peak < 0.25 * spec.split_point) opt.splits.push_back(peak);
    auto res = integrate_meda_result<double>(
        [&](const MedaPoint& mp) {
            if (mp.one_minus_s <= 0.0) return 0.0;
            const double lg = 0.5 * n * mehler_log_prefactor(mp.s, mp.one_minus_s) -
                              0.25 * (mp.s * sum2 + d2 / mp.s) - y * y / (4.0 * mp.t) + 2.0 * s * std::log(mp.t);
            return std::exp(lg);
        },
        order, spec, opt);
    if (!res.converged) throw AccuracyError("fundamental_solution quadrature did not converge", res.value, res.error);
    return res.value / order.gamma_sigma();
}

namespace detail {

// int_0^inf d_i e^{t Lap} f(x) e^{-y^2/4t} t^{-sigma} dt with d_i by a 5-point stencil under the integral.
inline double conjugate_integral(const ScalarField& f, const Point& x, double y, const FracOrder& order, int axis,
                                 const QuadratureSpec& spec) {
    const double y2 = y * y;
    MedaOptions opt;
    if (y > 0.0) opt.s_min = std::tanh(y2 / 1000.0);
    for (double t : {y2 / 8.0, y2, 8.0 * y2, f.length_scale * f.length_scale})
        if (t > 0.0 && std::tanh(t) > 4.0 * opt.s_min) opt.splits.push_back(std::tanh(t));
    return integrate_meda(
        [&](const MedaPoint& mp) {
            const double damp = y > 0.0 ? std::exp(-y2 / (4.0 * mp.t)) : 1.0;
            if (damp == 0.0) return 0.0;
            const double var = 2.0 * mp.t;
            // the smoothed field varies on the scale sqrt(l^2 + 2t); the step follows it
            const double h = 2e-3 * std::sqrt(f.length_scale * f.length_scale + var);
            Point e(x.dim);
            e[axis] = h;
            const double d = (-gaussian_mean(f, x + 2.0 * e, var, false) + 8.0 * gaussian_mean(f, x + e, var, false) -
                              8.0 * gaussian_mean(f, x - e, var, false) + gaussian_mean(f, x - 2.0 * e, var, false)) /
                             (12.0 * h);
            // dt / t^sigma = t dmu_sigma
            return mp.t * d * damp;
        },
        order, spec, opt);
}

} // namespace detail

/**
 * @brief v_i(x,y) = (-2/(4^sigma Gamma(sigma))) d_i int_0^inf e^{t Lap} f(x) e^{-y^2/4t} t^{-sigma} dt.
 *
 * Only L = -Lap is instantiated; other kinds raise UnsupportedError.
 */
inline double conjugate_poisson(const ScalarField& f, const Point& x, double y, const FracOrder& order, int axis,
                                OperatorKind kind = OperatorKind::Laplacian,
                                const QuadratureSpec& spec = operator_spec()) {
    if (kind != OperatorKind::Laplacian) throw UnsupportedError("conjugate Poisson integrals are implemented for -Lap only");
    if (!(y > 0.0)) throw DomainError("conjugate_poisson: y must be positive");
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (axis < 0 || axis >= f.dim) throw DomainError("conjugate_poisson: axis out of range");
    return -2.0 / order.norm_const() * detail::conjugate_integral(f, x, y, order, axis, spec);
}

/** @brief The y -> 0 value of conjugate_poisson: the same integral without the e^{-y^2/4t} factor. */
inline double conjugate_boundary_limit(const ScalarField& f, const Point& x, const FracOrder& order, int axis,
                                       const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (axis < 0 || axis >= f.dim) throw DomainError("conjugate_boundary_limit: axis out of range");
    return -2.0 / order.norm_const() * detail::conjugate_integral(f, x, 0.0, order, axis, spec);
}

/** @brief Samples u(x_i, y_j) of an extension (or a conjugate) on a tensor grid. */
struct ExtensionField {
    OperatorKind kind = OperatorKind::Laplacian;
    FracOrder order{0.5};
    std::vector<Point> x_grid;
    std::vector<double> y_grid;
    std::vector<double> values;  // values[i * ny + j] = u(x_i, y_j)

    size_t nx() const { return x_grid.size(); }
    size_t ny() const { return y_grid.size(); }
    double operator()(size_t i, size_t j) const { return values[i * ny() + j]; }

    void validate() const {
        if (y_grid.empty() || x_grid.empty()) throw DomainError("ExtensionField: empty grid");
        for (size_t j = 0; j < y_grid.size(); ++j) {
            if (!(y_grid[j] > 0.0)) throw DomainError("ExtensionField: y grid must be positive");
            if (j > 0 && !(y_grid[j] > y_grid[j - 1])) throw DomainError("ExtensionField: y grid must ascend");
        }
        if (values.size() != nx() * ny()) throw DomainError("ExtensionField: value count does not match the grid");
        for (double v : values)
            if (!std::isfinite(v)) throw DomainError("ExtensionField: non-finite value");
    }
};

/// Uniform grid of m points on [a, b].
inline std::vector<double> uniform_grid(double a, double b, int m) {
    if (m < 2) throw DomainError("uniform_grid: need at least two points");
    std::vector<double> g(m);
    for (int k = 0; k < m; ++k) g[k] = a + (b - a) * k / (m - 1);
    return g;
}

namespace detail {

template <typename Eval>
ExtensionField sample_grid(const std::vector<Point>& xs, const std::vector<double>& ys, const FracOrder& order,
                           OperatorKind kind, Eval&& eval) {
    ExtensionField out;
    out.kind = kind;
    out.order = order;
    out.x_grid = xs;
    out.y_grid = ys;
    out.values.assign(xs.size() * ys.size(), 0.0);
    parallel_for(out.values.size(), [&](size_t k) {
        const size_t i = k / ys.size(), j = k % ys.size();
        out.values[k] = eval(xs[i], ys[j]);
    });
    out.validate();
    return out;
}

} // namespace detail

/** @brief Poisson extension of f sampled on xs x ys. */
inline ExtensionField extension_field(const ScalarField& f, const std::vector<Point>& xs, const std::vector<double>& ys,
                                      const FracOrder& order, OperatorKind kind,
                                      const QuadratureSpec& spec = operator_spec()) {
    return detail::sample_grid(xs, ys, order, kind,
                               [&](const Point& x, double y) { return poisson_extend(f, x, y, order, kind, spec); });
}

/** @brief Poisson kernel P_y(x, z) sampled on xs x ys for a fixed z. */
inline ExtensionField kernel_field(const Point& z, const std::vector<Point>& xs, const std::vector<double>& ys,
                                   const FracOrder& order, OperatorKind kind,
                                   const QuadratureSpec& spec = QuadratureSpec{}) {
    return detail::sample_grid(xs, ys, order, kind,
                               [&](const Point& x, double y) { return poisson_kernel(x, z, y, order, kind, spec); });
}

/** @brief Conjugate Poisson integral v_axis of f sampled on xs x ys. */
inline ExtensionField conjugate_field(const ScalarField& f, const std::vector<Point>& xs, const std::vector<double>& ys,
                                      const FracOrder& order, int axis, const QuadratureSpec& spec = operator_spec()) {
    return detail::sample_grid(xs, ys, order, OperatorKind::Laplacian, [&](const Point& x, double y) {
        return conjugate_poisson(f, x, y, order, axis, OperatorKind::Laplacian, spec);
    });
}

namespace detail {

// Uniform one-dimensional grid steps; residual checks need at least 5 nodes per axis.
inline std::array<double, 2> grid_steps(const ExtensionField& u) {
    if (u.nx() < 5 || u.ny() < 5) throw DomainError("grid too coarse: need at least 5 nodes per axis");
    if (u.x_grid[0].dim != 1) throw UnsupportedError("residual checks are implemented for n = 1 grids");
    const double hx = u.x_grid[1][0] - u.x_grid[0][0];
    const double hy = u.y_grid[1] - u.y_grid[0];
    for (size_t i = 1; i < u.nx(); ++i)
        if (std::fabs(u.x_grid[i][0] - u.x_grid[i - 1][0] - hx) > 1e-9 * std::fabs(hx))
            throw DomainError("residual checks need a uniform x grid");
    for (size_t j = 1; j < u.ny(); ++j)
        if (std::fabs(u.y_grid[j] - u.y_grid[j - 1] - hy) > 1e-9 * std::fabs(hy))
            throw DomainError("residual checks need a uniform y grid");
    return {hx, hy};
}

} // namespace detail

/** @brief Max-norm residuals of the Cauchy-Riemann system for (u, v). */
struct CrResidual {
    double divergence = 0.0;  // y^{1-2sigma} u_y + d_x v
    double gradient = 0.0;    // d_x u - y^{-(1-2sigma)} v_y
    double max() const { return std::max(divergence, gradient); }
};

/**
 * @brief Centered-difference residuals of the Cauchy-Riemann system on interior nodes.
 *
 * With stride k only nodes (i,j) with i, j divisible by k are used, so a grid refined k times
 * is compared on the nodes of the coarse grid.
 */
inline CrResidual cr_residual(const ExtensionField& u, const ExtensionField& v, const FracOrder& order,
                              size_t stride = 1) {
    const auto [hx, hy] = detail::grid_steps(u);
    if (u.nx() != v.nx() || u.ny() != v.ny()) throw DomainError("cr_residual: u and v grids differ");
    const double a = 1.0 - 2.0 * order.sigma();
    CrResidual r;
    for (size_t i = 1; i + 1 < u.nx(); ++i)
        for (size_t j = 1; j + 1 < u.ny(); ++j) {
            if (i % stride || j % stride) continue;
            const double y = u.y_grid[j];
            const double uy = (u(i, j + 1) - u(i, j - 1)) / (2 * hy);
            const double ux = (u(i + 1, j) - u(i - 1, j)) / (2 * hx);
            const double vy = (v(i, j + 1) - v(i, j - 1)) / (2 * hy);
            const double vx = (v(i + 1, j) - v(i - 1, j)) / (2 * hx);
            r.divergence = std::max(r.divergence, std::fabs(std::pow(y, a) * uy + vx));
            r.gradient = std::max(r.gradient, std::fabs(ux - std::pow(y, -a) * vy));
        }
    return r;
}

/** @brief Max FD residual of -L_x u + ((1-2sigma)/y) u_y + u_yy on interior nodes (stride as in cr_residual). */
inline double extension_pde_residual(const ExtensionField& u, size_t stride = 1) {
    const auto [hx, hy] = detail::grid_steps(u);
    const double a = 1.0 - 2.0 * u.order.sigma();
    double res = 0.0;
    for (size_t i = 1; i + 1 < u.nx(); ++i)
        for (size_t j = 1; j + 1 < u.ny(); ++j) {
            if (i % stride || j % stride) continue;
            const double x = u.x_grid[i][0], y = u.y_grid[j];
            const double uxx = (u(i + 1, j) - 2 * u(i, j) + u(i - 1, j)) / (hx * hx);
            const double uy = (u(i, j + 1) - u(i, j - 1)) / (2 * hy);
            const double uyy = (u(i, j + 1) - 2 * u(i, j) + u(i, j - 1)) / (hy * hy);
            double lx = -uxx;
            if (u.kind == OperatorKind::Hermite) lx += x * x * u(i, j);
            res = std::max(res, std::fabs(-lx + a / y * uy + uyy));
        }
    return res;
}

/**
 * @brief Max FD residual of div(|y|^{1-2sigma} grad U) - |y|^{1-2sigma} V(x) U for the even
 * reflection U(x,y) = u(x,|y|), in divergence form with midpoint weights; V = |x|^2 for H, 0 for -Lap.
 *
 * Nodes are taken from the reflected grid, so the check stays away from y = 0.
 */
inline double reflection_residual(const ExtensionField& u, size_t stride = 1) {
    const auto [hx, hy] = detail::grid_steps(u);
    const double a = 1.0 - 2.0 * u.order.sigma();
    // reflected grid: -y_{m-1}, ..., -y_0, y_0, ..., y_{m-1}; only same-sign stencils are used
    const size_t m = u.ny();
    std::vector<double> ys(2 * m);
    std::vector<size_t> src(2 * m);
    for (size_t j = 0; j < m; ++j) {
        ys[m - 1 - j] = -u.y_grid[j];
        src[m - 1 - j] = j;
        ys[m + j] = u.y_grid[j];
        src[m + j] = j;
    }
    double res = 0.0;
    for (size_t i = 1; i + 1 < u.nx(); ++i)
        for (size_t k = 1; k + 1 < 2 * m; ++k) {
            if (ys[k - 1] * ys[k + 1] <= 0.0 || i % stride || src[k] % stride) continue;
            const double x = u.x_grid[i][0], y = ys[k];
            const double w = std::pow(std::fabs(y), a);
            const double wp = std::pow(std::fabs(0.5 * (ys[k] + ys[k + 1])), a);
            const double wm = std::pow(std::fabs(0.5 * (ys[k] + ys[k - 1])), a);
            const double U = u(i, src[k]), Up = u(i, src[k + 1]), Um = u(i, src[k - 1]);
            const double uxx = (u(i + 1, src[k]) - 2 * U + u(i - 1, src[k])) / (hx * hx);
            const double div = w * uxx + (wp * (Up - U) - wm * (U - Um)) / (hy * hy);
            const double pot = u.kind == OperatorKind::Hermite ? x * x : 0.0;
            res = std::max(res, std::fabs(div - w * pot * U));
        }
    return res;
}

/** @brief d(y) = e^{-sqrt(lambda) R} y^sigma I_{-sigma}(sqrt(lambda) y), the local Neumann mode. */
inline double neumann_mode(double lambda, double y, const FracOrder& order, double R = 1.0) {
    if (!(lambda > 0.0) || !(y > 0.0) || !(R > 0.0)) throw DomainError("neumann_mode: lambda, y and R must be positive");
    const double s = order.sigma();
    const double q = std::sqrt(lambda);
    return std::exp(-q * R) * std::pow(y, s) * bessel_i(-s, q * y);
}

/// The y -> 0 value of neumann_mode: e^{-sqrt(lambda) R} (sqrt(lambda)/2)^{-sigma} / Gamma(1-sigma).
inline double neumann_mode_at_zero(double lambda, const FracOrder& order, double R = 1.0) {
    if (!(lambda > 0.0) || !(R > 0.0)) throw DomainError("neumann_mode: lambda and R must be positive");
    const double s = order.sigma();
    const double q = std::sqrt(lambda);
    return std::exp(-q * R) * std::pow(0.5 * q, -s) / gamma(1.0 - s);
}

} // namespace fracext
