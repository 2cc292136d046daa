#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "point.hpp"
#include "rules.hpp"
#include "specfun.hpp"

namespace fracext {

enum class DecayClass { SchwartzLike, PolynomialWeight, CompactSupport };
enum class AnalyticTag { Custom, Constant, Gaussian, Hermite };

/**
 * @brief Declared decay of a field, as an envelope bounding |f(z)| for |z| >= R.
 *
 * Schwartz-like: A exp(-rate (R - r0)_+^2). Polynomial: A (1+R^2)^{-exponent/2}, together
 * with the declared weighted-L^p_N membership (p, N). Compact: A up to `radius`, zero beyond.
 */
struct DecayInfo {
    DecayClass kind = DecayClass::SchwartzLike;
    double amplitude = 1.0;
    double rate = 0.5;
    double r0 = 0.0;
    double exponent = 0.0;
    double p = 1.0;
    double N = 0.0;
    double radius = 0.0;

    static DecayInfo schwartz(double amplitude, double rate, double r0) {
        DecayInfo d;
        d.kind = DecayClass::SchwartzLike;
        d.amplitude = amplitude;
        d.rate = rate;
        d.r0 = r0;
        return d;
    }
    static DecayInfo polynomial(double amplitude, double exponent, double p, double N) {
        DecayInfo d;
        d.kind = DecayClass::PolynomialWeight;
        d.amplitude = amplitude;
        d.exponent = exponent;
        d.p = p;
        d.N = N;
        return d;
    }
    static DecayInfo compact(double amplitude, double radius) {
        DecayInfo d;
        d.kind = DecayClass::CompactSupport;
        d.amplitude = amplitude;
        d.radius = radius;
        return d;
    }

    double envelope(double R) const {
        switch (kind) {
        case DecayClass::CompactSupport: return R > radius ? 0.0 : amplitude;
        case DecayClass::PolynomialWeight: return amplitude * std::pow(1.0 + R * R, -0.5 * exponent);
        default: {
            const double e = std::max(0.0, R - r0);
            return amplitude * std::exp(-rate * e * e);
        }
        }
    }

    /// Smallest radius beyond which the envelope stays below tol (infinite if it never does).
    double truncation_radius(double tol) const {
        switch (kind) {
        case DecayClass::CompactSupport: return radius;
        case DecayClass::PolynomialWeight:
            if (exponent <= 0.0) return std::numeric_limits<double>::infinity();
            return std::sqrt(std::max(0.0, std::pow(amplitude / tol, 2.0 / exponent) - 1.0));
        default:
            if (amplitude <= tol) return 0.0;
            return r0 + std::sqrt(std::log(amplitude / tol) / rate);
        }
    }

    /// Whether the field lies in L_sigma = L^1_{n/2+sigma}.
    bool in_l_sigma(double sigma) const {
        if (kind != DecayClass::PolynomialWeight) return true;
        return exponent > -2.0 * sigma;
    }
};

/** @brief Region where the field is C^2: all of R^n minus closed balls around listed points. */
struct SmoothRegion {
    std::vector<Point> excluded;
    double excluded_radius = 0.0;

    bool contains(const Point& x) const {
        for (const auto& e : excluded)
            if (std::sqrt(dist2(x, e)) <= excluded_radius) return false;
        return true;
    }
    bool covers_ball(const Point& x, double r) const {
        for (const auto& e : excluded)
            if (std::sqrt(dist2(x, e)) <= excluded_radius + r) return false;
        return true;
    }
};

/** @brief An evaluatable function R^n -> R with decay and smoothness metadata. */
struct ScalarField {
    int dim = 1;
    std::function<double(const Point&)> eval;
    DecayInfo decay;
    SmoothRegion smooth;
    AnalyticTag tag = AnalyticTag::Custom;
    MultiIndex hermite_index;
    /// Smallest length over which the field varies appreciably; drives panel sizes.
    double length_scale = 1.0;
    std::string name = "custom";

    double operator()(const Point& x) const { return eval(x); }
};

// ---------------------------------------------------------------------------
// Spherical rules. Directions come in antipodal pairs; each rule stores one
// representative per pair and weights summing to one.

struct SphereRule {
    std::vector<Point> dirs;
    std::vector<double> weights;
};

namespace detail {

inline std::vector<std::pair<double, double>> gauss_legendre_runtime(int N) {
    std::vector<std::pair<double, double>> out(N);
    for (int i = 0; i < (N + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (N + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < N; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            dp = N * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        out[i] = {-z, w};
        out[N - 1 - i] = {z, w};
    }
    return out;
}

inline SphereRule build_sphere_rule(int n, int level) {
    SphereRule r;
    if (n == 1) {
        r.dirs.push_back(Point{1.0});
        r.weights.push_back(1.0);
    } else if (n == 2) {
        const int m = 8 << level;
        for (int j = 0; j < m; ++j) {
            const double phi = kPi * j / m;
            r.dirs.push_back(Point{std::cos(phi), std::sin(phi)});
            r.weights.push_back(1.0 / m);
        }
    } else {
        const int nt = 8 << level;        // Gauss-Legendre nodes in cos(theta) on [-1,1]
        const int nphi = 2 * nt;          // trapezoid in phi
        const auto gl = gauss_legendre_runtime(nt);
        for (const auto& [ct, w] : gl) {
            if (ct <= 0.0) continue;
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < nphi; ++j) {
                const double phi = 2.0 * kPi * j / nphi;
                r.dirs.push_back(Point{st * std::cos(phi), st * std::sin(phi), ct});
                r.weights.push_back(w / nphi);
            }
        }
    }
    return r;
}

constexpr int kSphereLevels = 5;

inline const SphereRule& sphere_rule(int n, int level) {
    static const auto rules = [] {
        std::vector<std::vector<SphereRule>> all(kMaxDim + 1);
        for (int d = 1; d <= kMaxDim; ++d)
            for (int l = 0; l <= (d == 1 ? 0 : kSphereLevels); ++l) all[d].push_back(build_sphere_rule(d, l));
        return all;
    }();
    Point::check_dim(n);
    if (n == 1) return rules[1][0];
    return rules[n][std::min(level, kSphereLevels)];
}

} // namespace detail

/**
 * @brief Mean over unit directions of a pair functional g(omega), where the caller's g
 * already symmetrizes over omega and -omega. Refines the rule until successive levels agree.
 */
template <typename V, typename G>
V sphere_pair_mean(int n, G&& g, double tol) {
    auto apply = [&](const SphereRule& r) {
        V s{};
        for (size_t k = 0; k < r.dirs.size(); ++k) s += r.weights[k] * g(r.dirs[k]);
        return s;
    };
    if (n == 1) return g(detail::sphere_rule(1, 0).dirs[0]);
    V prev = apply(detail::sphere_rule(n, 0));
    for (int l = 1; l <= detail::kSphereLevels; ++l) {
        V cur = apply(detail::sphere_rule(n, l));
        if (qnorm(cur - prev) <= tol * (1.0 + qnorm(cur))) return cur;
        prev = cur;
    }
    return prev;
}

/// Spherical mean of f over the sphere of radius r centered at c.
inline double sphere_mean(const ScalarField& f, const Point& c, double r, double tol = 1e-13) {
    return sphere_pair_mean<double>(
        c.dim,
        [&](const Point& w) {
            Point p = c, q = c;
            for (int i = 0; i < c.dim; ++i) {
                p[i] += r * w[i];
                q[i] -= r * w[i];
            }
            return 0.5 * (f(p) + f(q));
        },
        tol);
}

/// Laplacian of f at x from spherical means at radii h and 2h with Richardson extrapolation.
inline double laplacian_estimate(const ScalarField& f, const Point& x, double h) {
    const int n = x.dim;
    const double fx = f(x);
    const double a1 = 2.0 * n * (sphere_mean(f, x, h) - fx) / (h * h);
    const double a2 = 2.0 * n * (sphere_mean(f, x, 2 * h) - fx) / (4 * h * h);
    return (4.0 * a1 - a2) / 3.0;
}

/// Regularized upper incomplete gamma Q(n/2, a^2), the Gaussian radial tail beyond rho = a.
inline double gaussian_radial_tail(int n, double a) {
    switch (n) {
    case 1: return std::erfc(a);
    case 2: return std::exp(-a * a);
    default: return std::erfc(a) + 2.0 * a / std::sqrt(kPi) * std::exp(-a * a);
    }
}

/// Radial breakpoints 0, l, 2l, 4l, ... up to rmax.
inline std::vector<double> geometric_breakpoints(double rmin, double rmax, double scale) {
    std::vector<double> b{rmin};
    double r = std::max(scale, rmin > 0 ? 2.0 * rmin : scale);
    while (r < rmax) {
        b.push_back(r);
        r *= 2.0;
    }
    b.push_back(rmax);
    return b;
}

/**
 * @brief Gaussian mean E[f(c + W)] with W ~ N(0, var I), optionally minus f(c).
 *
 * Computed radially: |S| pi^{-n/2} int e^{-rho^2} rho^{n-1} M(sqrt(2 var) rho) d rho, with the
 * spherical mean M set to zero beyond the field's truncation radius.
 */
inline double gaussian_mean(const ScalarField& f, const Point& c, double var, bool subtract_center,
                            double tol = 1e-13) {
    const int n = c.dim;
    const double scale = std::sqrt(2.0 * var);
    const double fc = subtract_center ? f(c) : 0.0;
    const double rho_gauss = 6.6;
    const double r_field = c.norm() + f.decay.truncation_radius(1e-17);
    const double rmax = std::min(scale * rho_gauss, r_field);
    const double norm = sphere_area(n) / std::pow(kPi, 0.5 * n);
    double total = 0.0;
    if (rmax > 0.0) {
        const auto br = geometric_breakpoints(0.0, rmax, f.length_scale);
        for (size_t k = 0; k + 1 < br.size(); ++k) {
            auto q = gauss_legendre_adaptive<double>(
                [&](double r) {
                    const double rho = r / scale;
                    const double m = sphere_mean(f, c, r, tol) - fc;
                    return std::exp(-rho * rho) * std::pow(rho, n - 1) * m / scale;
                },
                br[k], br[k + 1], tol * 0.1, tol, 12);
            total += q.value;
        }
    }
    total *= norm;
    if (subtract_center && rmax < scale * rho_gauss) total -= fc * gaussian_radial_tail(n, rmax / scale);
    return total;
}

/**
 * @brief Spot check of the weighted norm (int |f|^p (1+|z|^2)^{-Np} dz)^{1/p} by radial quadrature.
 *
 * Throws DomainError when the declared envelope is not integrable against the weight or the
 * sampled integral is not finite.
 */
inline double lpn_norm(const ScalarField& f, double p, double N) {
    const int n = f.dim;
    const auto& d = f.decay;
    double rmax = 60.0;
    if (d.kind == DecayClass::PolynomialWeight) {
        if (!(p * (d.exponent + 2.0 * N) > n)) throw DomainError("declared decay does not give a finite L^p_N norm");
        rmax = 1e4;
    } else if (d.kind == DecayClass::CompactSupport) {
        rmax = d.radius;
    } else {
        rmax = d.truncation_radius(1e-17);
    }
    const Point c(n);
    double total = 0.0;
    const auto br = geometric_breakpoints(0.0, std::max(rmax, 1e-3), f.length_scale);
    for (size_t k = 0; k + 1 < br.size(); ++k) {
        auto q = gauss_legendre_adaptive<double>(
            [&](double r) {
                const double m = sphere_pair_mean<double>(
                    n,
                    [&](const Point& w) {
                        Point a = c, b = c;
                        for (int i = 0; i < n; ++i) {
                            a[i] += r * w[i];
                            b[i] -= r * w[i];
                        }
                        return 0.5 * (std::pow(std::fabs(f(a)), p) + std::pow(std::fabs(f(b)), p));
                    },
                    1e-10);
                return std::pow(r, n - 1) * m * std::pow(1.0 + r * r, -N * p);
            },
            br[k], br[k + 1], 1e-12, 1e-9, 10);
        total += q.value;
    }
    total *= sphere_area(n);
    if (d.kind == DecayClass::PolynomialWeight) {
        const double e = p * (d.exponent + 2.0 * N) - n;
        total += sphere_area(n) * std::pow(d.amplitude, p) * std::pow(rmax, -e) / e;
    }
    if (!std::isfinite(total)) throw DomainError("weighted norm spot check is not finite");
    return std::pow(total, 1.0 / p);
}

} // namespace fracext
