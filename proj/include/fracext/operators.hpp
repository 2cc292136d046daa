#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "kernels.hpp"
#include "order.hpp"
#include "quadrature.hpp"
#include "semigroup.hpp"
#include "specfun.hpp"

namespace fracext {

/** @brief (-Lap)^sigma f(x) = c_{n,sigma} [ball principal value + exterior integral]. */
inline double frac_laplacian_si(const ScalarField& f, const Point& x, const FracOrder& order, double delta = 1.0,
                                const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (!f.decay.in_l_sigma(order.sigma())) throw DomainError("field is not in the admissible weighted L^1 class");
    const double near = principal_value_ball(f, x, delta, order, spec);
    const double far = exterior_integral(f, x, delta, order, spec);
    return order.lap_const(f.dim) * (near + far);
}

/** @brief (-Lap)^sigma f(x) = (1/Gamma(-sigma)) int_0^inf (e^{t Lap} f(x) - f(x)) t^{-1-sigma} dt. */
inline double frac_laplacian_heat(const ScalarField& f, const Point& x, const FracOrder& order,
                                  const QuadratureSpec& spec = operator_spec()) {
    return heat_route_integral(f, x, order, OperatorKind::Laplacian, spec) / order.gamma_minus_sigma();
}

/** @brief H^sigma f(x) from the heat semigroup of the harmonic oscillator. */
inline double frac_hermite_heat(const ScalarField& f, const Point& x, const FracOrder& order,
                                const QuadratureSpec& spec = operator_spec()) {
    return heat_route_integral(f, x, order, OperatorKind::Hermite, spec) / order.gamma_minus_sigma();
}

namespace detail {

inline QuadratureSpec kernel_spec() { return QuadratureSpec{1e-12, 1e-10, 9, 0.5}; }

// Half-sum of F(x,x+h)(f(x)-f(x+h)) and F(x,x-h)(f(x)-f(x-h)).
inline double s_sigma_pair_term(const ScalarField& f, const Point& x, double fx, const Point& h,
                                const FracOrder& order) {
    const double fp = f(x + h), fm = f(x - h);
    const auto F = f_sigma_pair(x, h, order, kernel_spec());
    return 0.5 * (F[0] * (2.0 * fx - fp - fm) + F[1] * (fm - fp));
}

// r^{n-1} times the directional mean of the pair term on the sphere of radius r.
inline double s_sigma_radial(const ScalarField& f, const Point& x, double fx, double r, const FracOrder& order) {
    const int n = x.dim;
    const double m = sphere_pair_mean<double>(
        n,
        [&](const Point& w) {
            Point h(n);
            for (int i = 0; i < n; ++i) h[i] = r * w[i];
            return s_sigma_pair_term(f, x, fx, h, order);
        },
        1e-9);
    return std::pow(r, n - 1) * m;
}

} // namespace detail

/**
 * @brief S_sigma f(x) = int F_sigma(x,z)(f(x) - f(z)) dz.
 *
 * The ball |z-x| < delta uses the symmetrized pair of F_sigma(x, x+h) and F_sigma(x, x-h);
 * below a tiny radius the kernel is replaced by its diagonal singularity c_{n,sigma}|h|^{-n-2sigma}.
 */
inline double s_sigma(const ScalarField& f, const Point& x, const FracOrder& order, double delta = 1.0,
                      const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    if (!f.smooth.covers_ball(x, delta)) throw PreconditionError("field is not C^2 on the ball around x");
    const int n = f.dim;
    const double s2 = 2.0 * order.sigma();
    const double fx = f(x);
    const double rmin = detail::taylor_radius(f, delta);
    const double lap = laplacian_estimate(f, x, 10.0 * rmin);
    const double inner = -order.lap_const(n) * lap / (2.0 * n) * std::pow(rmin, 2.0 - s2) / (2.0 - s2);
    auto q = tanh_sinh<double>(
        [&](double r, double, double) { return detail::s_sigma_radial(f, x, fx, r, order); }, rmin, delta,
        spec.abs_tol, spec.rel_tol, spec.max_levels);
    if (!q.converged) throw AccuracyError("S_sigma near field did not converge", q.value, q.error);
    // F_sigma(x, z) <= C e^{-|x-z|^2/4}, so 14 units past the ball leave nothing visible
    const double rmax = delta + 14.0;
    const double panel = std::min(2.0, 2.0 * f.length_scale);
    double far = 0.0;
    for (double a = delta; a < rmax; a += panel) {
        const double b = std::min(rmax, a + panel);
        auto p = gauss_legendre_adaptive<double>(
            [&](double r) { return detail::s_sigma_radial(f, x, fx, r, order); }, a, b, spec.abs_tol, spec.rel_tol,
            10);
        if (!p.converged) throw AccuracyError("S_sigma exterior panel did not converge", p.value, p.error);
        far += p.value;
    }
    return sphere_area(n) * (inner + q.value + far);
}

/** @brief H^sigma f(x) = S_sigma f(x) + f(x) B_sigma(x). */
inline double frac_hermite(const ScalarField& f, const Point& x, const FracOrder& order, double delta = 1.0,
                           const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (!f.smooth.contains(x)) throw DomainError("x lies outside the field's smooth region");
    const double fx = f(x);
    const double b = fx == 0.0 ? 0.0 : fx * b_sigma(x, order, f.dim, detail::kernel_spec());
    return s_sigma(f, x, order, delta, spec) + b;
}

/** @brief Coefficient-wise H^sigma: c_alpha -> (2|alpha|+n)^sigma c_alpha. */
inline HermiteExpansion frac_hermite_spectral(const HermiteExpansion& e, const FracOrder& order) {
    HermiteExpansion out = e;
    for (auto& [alpha, c] : out.coeffs) c *= std::pow(alpha.eigenvalue(), order.sigma());
    return out;
}

/** @brief Coefficient-wise H^{-sigma}: c_alpha -> (2|alpha|+n)^{-sigma} c_alpha. */
inline HermiteExpansion negative_power(const HermiteExpansion& e, const FracOrder& order) {
    HermiteExpansion out = e;
    for (auto& [alpha, c] : out.coeffs) c *= std::pow(alpha.eigenvalue(), -order.sigma());
    return out;
}

/**
 * @brief H^{-sigma} on an expansion by the heat route: each coefficient is multiplied by
 * (1/Gamma(sigma)) int_0^inf e^{-t lambda} t^{sigma-1} dt, evaluated by quadrature.
 */
inline HermiteExpansion negative_power_heat(const HermiteExpansion& e, const FracOrder& order,
                                            const QuadratureSpec& spec = QuadratureSpec{}) {
    const double sigma = order.sigma();
    HermiteExpansion out = e;
    for (auto& [alpha, c] : out.coeffs) {
        const double lambda = alpha.eigenvalue();
        const double m = integrate_meda(
            [&](const MedaPoint& mp) { return std::exp(2.0 * sigma * std::log(mp.t) - lambda * mp.t); }, order,
            spec);
        c *= m / order.gamma_sigma();
    }
    return out;
}

/**
 * @brief L^{-sigma} f(x) = (1/Gamma(sigma)) int_0^inf e^{-tL} f(x) t^{sigma-1} dt on a field.
 *
 * For L = -Lap the integral converges only when n > 2 sigma and f is integrable.
 */
inline double negative_power_field(const ScalarField& f, const Point& x, const FracOrder& order, OperatorKind kind,
                                   const QuadratureSpec& spec = operator_spec()) {
    if (x.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    const double sigma = order.sigma();
    if (kind == OperatorKind::Laplacian) {
        if (!(f.dim > 2.0 * sigma)) throw DomainError("negative power of -Lap diverges unless n > 2 sigma");
        if (f.decay.kind == DecayClass::PolynomialWeight)
            throw DomainError("negative power of -Lap needs an integrable (Schwartz-like or compact) field");
    }
    const double ell = f.length_scale;
    const double t0 = 1e-8 * ell * ell;
    MedaOptions opt;
    opt.s_min = std::tanh(t0);
    if (std::tanh(ell * ell) > 4.0 * opt.s_min) opt.splits.push_back(std::tanh(ell * ell));
    const double head = f(x) * std::pow(t0, sigma) / sigma;
    const double body = integrate_meda(
        [&](const MedaPoint& mp) {
            return detail::scaled_product(2.0 * sigma * std::log(mp.t),
                                          heat_semigroup_s(f, x, mp.t, mp.s, mp.one_minus_s, kind));
        },
        order, spec, opt);
    return (head + body) / order.gamma_sigma();
}

/** @brief Outcome of a maximum-principle check: H^sigma f(x0) and whether it is <= tolerance. */
struct PrincipleCheck {
    double value = 0.0;
    bool pass = false;
};

namespace detail {

inline double radical_inverse(unsigned i, unsigned base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (i > 0) {
        r += f * (i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

// Half-width of the box where sampled nonnegativity is asserted.
inline double sampling_radius(const ScalarField& f) {
    return std::min(12.0, std::max(f.decay.truncation_radius(1e-12), 2.0 * f.length_scale));
}

} // namespace detail

/** @brief Asserts f >= 0 at 10^4 Halton points of the box of half-width R around x0; throws otherwise. */
inline void assert_nonnegative_sampled(const ScalarField& f, const Point& x0, int samples = 10000) {
    static const unsigned primes[3] = {2, 3, 5};
    const int n = f.dim;
    const double R = detail::sampling_radius(f) + x0.norm();
    for (int k = 1; k <= samples; ++k) {
        Point z(n);
        for (int i = 0; i < n; ++i) z[i] = -R + 2.0 * R * detail::radical_inverse(static_cast<unsigned>(k), primes[i]);
        if (f(z) < -1e-12) throw PreconditionError("field takes negative values (sampled)");
    }
}

/** @brief H^sigma f(x0) for f >= 0 with f(x0) = 0; PASS when the value is at most `tol`. */
inline PrincipleCheck check_maximum_principle(const ScalarField& f, const Point& x0, const FracOrder& order,
                                              double tol = 1e-8, const QuadratureSpec& spec = operator_spec()) {
    if (x0.dim != f.dim) throw DomainError("dimension mismatch between point and field");
    if (std::fabs(f(x0)) > 1e-12) throw PreconditionError("field must vanish at x0");
    assert_nonnegative_sampled(f, x0);
    PrincipleCheck out;
    out.value = frac_hermite(f, x0, order, 1.0, spec);
    out.pass = out.value <= tol;
    return out;
}

/**
 * @brief Hermite coefficients <f, h_alpha> for |alpha| <= K by the trapezoid rule on a tensor grid.
 *
 * Coefficients below 1e-15 of the largest are dropped. The tail bound
 * ||H^m f|| / (2(K+1)+n)^m uses ||H^m f|| estimated from the retained coefficients.
 */
inline HermiteExpansion project_hermite(const ScalarField& f, int K = 40, int m = 4) {
    const int n = f.dim;
    if (K < 0) throw DomainError("project_hermite: degree cap must be non-negative");
    const double L = std::sqrt(2.0 * K + n) + 10.0;
    const int max_nodes[4] = {0, 4000, 600, 160};
    double h = std::min(0.05, 0.1 * f.length_scale);
    h = std::max(h, 2.0 * L / max_nodes[n]);
    const int N = static_cast<int>(std::ceil(2.0 * L / h)) + 1;
    h = 2.0 * L / (N - 1);
    std::vector<double> xs(N);
    for (int j = 0; j < N; ++j) xs[j] = -L + j * h;
    // hk[k * N + j] = h * h_k(x_j)
    std::vector<double> hk(static_cast<size_t>(K + 1) * N), buf(K + 1);
    for (int j = 0; j < N; ++j) {
        hermite_functions_1d(K, xs[j], buf.data());
        for (int k = 0; k <= K; ++k) hk[static_cast<size_t>(k) * N + j] = h * buf[k];
    }
    HermiteExpansion out(n, K);
    std::vector<std::pair<MultiIndex, double>> raw;
    if (n == 1) {
        std::vector<double> F(N);
        for (int j = 0; j < N; ++j) F[j] = f(Point{xs[j]});
        for (int k = 0; k <= K; ++k) {
            double s = 0.0;
            for (int j = 0; j < N; ++j) s += hk[static_cast<size_t>(k) * N + j] * F[j];
            raw.emplace_back(MultiIndex{k}, s);
        }
    } else if (n == 2) {
        std::vector<double> T(static_cast<size_t>(K + 1) * N, 0.0);  // T[k1][j2]
        std::vector<double> col(N);
        for (int j2 = 0; j2 < N; ++j2) {
            for (int j1 = 0; j1 < N; ++j1) col[j1] = f(Point{xs[j1], xs[j2]});
            for (int k1 = 0; k1 <= K; ++k1) {
                double s = 0.0;
                for (int j1 = 0; j1 < N; ++j1) s += hk[static_cast<size_t>(k1) * N + j1] * col[j1];
                T[static_cast<size_t>(k1) * N + j2] = s;
            }
        }
        for (int k1 = 0; k1 <= K; ++k1)
            for (int k2 = 0; k1 + k2 <= K; ++k2) {
                double s = 0.0;
                for (int j2 = 0; j2 < N; ++j2) s += hk[static_cast<size_t>(k2) * N + j2] * T[static_cast<size_t>(k1) * N + j2];
                raw.emplace_back(MultiIndex{k1, k2}, s);
            }
    } else {
        // T1[k1][j2][j3], then T2[k1][k2][j3]
        const size_t NN = static_cast<size_t>(N) * N;
        std::vector<double> T1(static_cast<size_t>(K + 1) * NN, 0.0), col(N);
        for (int j3 = 0; j3 < N; ++j3)
            for (int j2 = 0; j2 < N; ++j2) {
                for (int j1 = 0; j1 < N; ++j1) col[j1] = f(Point{xs[j1], xs[j2], xs[j3]});
                for (int k1 = 0; k1 <= K; ++k1) {
                    double s = 0.0;
                    for (int j1 = 0; j1 < N; ++j1) s += hk[static_cast<size_t>(k1) * N + j1] * col[j1];
                    T1[k1 * NN + static_cast<size_t>(j2) * N + j3] = s;
                }
            }
        std::vector<double> T2(static_cast<size_t>(K + 1) * (K + 1) * N, 0.0);
        for (int k1 = 0; k1 <= K; ++k1)
            for (int k2 = 0; k1 + k2 <= K; ++k2)
                for (int j3 = 0; j3 < N; ++j3) {
                    double s = 0.0;
                    for (int j2 = 0; j2 < N; ++j2)
                        s += hk[static_cast<size_t>(k2) * N + j2] * T1[k1 * NN + static_cast<size_t>(j2) * N + j3];
                    T2[(static_cast<size_t>(k1) * (K + 1) + k2) * N + j3] = s;
                }
        for (int k1 = 0; k1 <= K; ++k1)
            for (int k2 = 0; k1 + k2 <= K; ++k2)
                for (int k3 = 0; k1 + k2 + k3 <= K; ++k3) {
                    double s = 0.0;
                    for (int j3 = 0; j3 < N; ++j3)
                        s += hk[static_cast<size_t>(k3) * N + j3] * T2[(static_cast<size_t>(k1) * (K + 1) + k2) * N + j3];
                    raw.emplace_back(MultiIndex{k1, k2, k3}, s);
                }
    }
    double cmax = 0.0;
    for (const auto& [alpha, c] : raw) cmax = std::max(cmax, std::fabs(c));
    double hm2 = 0.0;
    for (const auto& [alpha, c] : raw) {
        if (std::fabs(c) <= 1e-15 * cmax) continue;
        out.set(alpha, c);
        hm2 += std::pow(alpha.eigenvalue(), 2.0 * m) * c * c;
    }
    out.tail_bound = std::sqrt(hm2) / std::pow(2.0 * (K + 1) + n, m);
    return out;
}

} // namespace fracext
