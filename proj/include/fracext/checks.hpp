#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <cstdio>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "catalog.hpp"
#include "extension.hpp"
#include "operators.hpp"
#include "report.hpp"

namespace fracext {

/** @brief Knobs for the randomized and exploratory checks. */
struct SuiteConfig {
    unsigned seed = 20240611;
    int principle_functions = 50;
    int comparison_pairs = 20;
    int harnack_functions = 10;
};

namespace checks {

inline const std::array<double, 3> kSigmas{0.25, 0.5, 0.75};

inline std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

inline std::string tag(const std::string& head, double sigma) { return head + fmt(" s=%.4g", sigma); }

inline std::string tag(const std::string& head, double sigma, double x) {
    return tag(head, sigma) + fmt(" x=%.4g", x);
}

/// Nine points on [-2, 2].
inline std::vector<double> nine_points() { return uniform_grid(-2.0, 2.0, 9); }

/// sqrt(2/pi) int_0^inf xi^{2 sigma} e^{-xi^2/2} cos(xi x) d xi: (-Lap)^sigma e^{-x^2/2} from its transform.
inline double fourier_gaussian_power(double x, double sigma) {
    auto q = integrate_halfline<double>(
        [&](double xi) { return std::pow(xi, 2.0 * sigma) * std::exp(-0.5 * xi * xi) * std::cos(xi * x); }, 0.0, 4.0,
        1e-15, 1e-13, 10);
    return std::sqrt(2.0 / kPi) * q.value;
}

/// -sqrt(2/pi) int_0^inf xi^{2 sigma - 1} e^{-xi^2/2} sin(xi x) d xi: d/dx (-Lap)^{-(1-sigma)} e^{-x^2/2}.
inline double fourier_gaussian_riesz(double x, double sigma) {
    auto q = integrate_halfline<double>(
        [&](double xi) { return std::pow(xi, 2.0 * sigma - 1.0) * std::exp(-0.5 * xi * xi) * std::sin(xi * x); },
        0.0, 4.0, 1e-15, 1e-13, 10);
    return -std::sqrt(2.0 / kPi) * q.value;
}

/// Convolution of the gaussian with a one-dimensional kernel k(x - z), by adaptive quadrature.
template <typename K>
double gaussian_convolution(double x, K&& k) {
    double total = 0.0;
    for (double a = -12.0; a < 12.0; a += 1.0)
        total += gauss_legendre_adaptive<double>([&](double z) { return k(x - z) * std::exp(-0.5 * z * z); }, a,
                                                 a + 1.0, 1e-15, 1e-13)
                     .value;
    return total;
}

/// a f + b g as a field; decay and scale are the weaker of the two.
inline ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g) {
    ScalarField h = f;
    h.eval = [a, b, fe = f.eval, ge = g.eval](const Point& z) { return a * fe(z) + b * ge(z); };
    h.decay = DecayInfo::schwartz(std::fabs(a) * f.decay.amplitude + std::fabs(b) * g.decay.amplitude,
                                  std::min(f.decay.rate, g.decay.rate), std::max(f.decay.r0, g.decay.r0));
    h.tag = AnalyticTag::Custom;
    h.length_scale = std::min(f.length_scale, g.length_scale);
    h.name = "combination";
    return h;
}

/// A one-dimensional field backed by a Hermite expansion.
inline ScalarField expansion_field(const HermiteExpansion& e) {
    ScalarField f;
    f.dim = e.dim;
    double amp = 0.0;
    for (const auto& [alpha, c] : e.coeffs) amp += std::fabs(c);
    const double lambda = 2.0 * e.max_order() + e.dim;
    f.eval = [e](const Point& z) { return e(z); };
    f.decay = DecayInfo::schwartz(amp, 0.5, std::sqrt(lambda));
    f.length_scale = 1.0 / std::sqrt(lambda);
    f.name = "expansion";
    return f;
}

/// Terms (a, b, c) of z -> (z - x0)^2 sum a e^{-b (z - c)^2}, a nonnegative field vanishing at x0.
struct VanishingTerm {
    double weight, rate, center;
};

inline ScalarField vanishing_field(double x0, const std::vector<VanishingTerm>& terms) {
    ScalarField f;
    f.dim = 1;
    f.eval = [x0, terms](const Point& z) {
        double s = 0.0;
        for (const auto& t : terms) s += t.weight * std::exp(-t.rate * (z[0] - t.center) * (z[0] - t.center));
        return (z[0] - x0) * (z[0] - x0) * s;
    };
    // (z-x0)^2 <= 2(z-c)^2 + 2(c-x0)^2 and (z-c)^2 e^{-b(z-c)^2/2} <= 2/(e b)
    double amp = 0.0, rate = 1e300, r0 = 0.0, bmax = 0.0;
    for (const auto& t : terms) {
        amp += t.weight * (4.0 / (std::exp(1.0) * t.rate) + 2.0 * (t.center - x0) * (t.center - x0));
        rate = std::min(rate, 0.5 * t.rate);
        r0 = std::max(r0, std::fabs(t.center));
        bmax = std::max(bmax, t.rate);
    }
    f.decay = DecayInfo::schwartz(amp, rate, r0);
    f.length_scale = std::min(1.0, 1.0 / std::sqrt(bmax));
    f.name = "vanishing";
    return f;
}

inline std::vector<VanishingTerm> random_terms(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_real_distribution<double> weight(0.2, 2.0), rate(0.3, 1.5), center(-1.5, 1.5);
    std::vector<VanishingTerm> terms(count(rng));
    for (auto& t : terms) t = {weight(rng), rate(rng), center(rng)};
    return terms;
}

// ---------------------------------------------------------------------------
// kernels

inline std::vector<SuiteCase> constant_cases() {
    const FracOrder half(0.5);
    const double inv_pi = 1.0 / kPi;
    return {
        check::near("c_{1,1/2} = 1/pi", inv_pi, half.lap_const(1), 1e-12 * inv_pi),
        check::near("poisson constant Gamma(1)/(sqrt(pi) Gamma(1/2)) = 1/pi", inv_pi,
                    poisson_kernel_laplacian(Point{0.0}, Point{0.0}, 1.0, half, 1), 1e-12 * inv_pi),
    };
}

/// int P_y(0, z) dz over R, with z = y tan(theta).
inline double poisson_mass(double y, const FracOrder& order) {
    auto q = tanh_sinh<double>(
        [&](double th, double, double) {
            const double c = std::cos(th);
            if (c <= 0.0) return 0.0;
            return poisson_kernel_laplacian(Point{0.0}, Point{y * std::tan(th)}, y, order, 1) * y / (c * c);
        },
        -0.5 * kPi, 0.5 * kPi, 1e-15, 1e-13, 10);
    return q.value;
}

inline std::vector<SuiteCase> poisson_mass_cases() {
    std::vector<SuiteCase> out;
    for (double s : kSigmas)
        for (double y : {0.1, 1.0, 10.0})
            out.push_back(check::near(tag("poisson mass", s) + fmt(" y=%g", y), 1.0, poisson_mass(y, FracOrder(s)), 1e-8));
    return out;
}

inline std::vector<SuiteCase> kernel_bound_cases() {
    std::vector<SuiteCase> out;
    const int heat_v = count_bound_violations(heat_bound_samples(4 * kHeatCalibration), frozen_bounds(0.5).heat);
    out.push_back(check::at_most("heat bound violations (refined grid)", heat_v, 0));
    for (double s : kSigmas) {
        const FracOrder order(s);
        const auto& b = frozen_bounds(s);
        out.push_back(check::at_most(tag("F bound violations", s),
                                     count_bound_violations(f_bound_samples(4 * kFCalibration, order), b.f_kernel), 0));
        out.push_back(check::at_most(tag("B bound violations", s),
                                     count_bound_violations(b_bound_samples(4 * kBCalibration, order), b.b_growth), 0));
    }
    return out;
}

inline std::vector<SuiteCase> kernel_property_cases() {
    std::vector<SuiteCase> out;
    for (double s : kSigmas) {
        const FracOrder order(s);
        for (auto [x, z] : {std::array<double, 2>{0.3, -1.1}, {1.7, 0.2}, {-2.5, -2.4}}) {
            const double a = f_sigma_kernel(Point{x}, Point{z}, order);
            const double b = f_sigma_kernel(Point{z}, Point{x}, order);
            out.push_back(check::near(tag("F symmetric", s, x), a, b, 1e-14 * std::fabs(a)));
            out.push_back(check::at_least(tag("F positive", s, x), a, 0.0));
        }
        for (double x : {0.0, 1.0, 4.0}) out.push_back(check::at_least(tag("B nonnegative", s, x), b_sigma(Point{x}, order, 1), 0.0));
        const double lam = 3.0;
        const double p1 = poisson_kernel_laplacian(Point{0.2}, Point{0.9}, 0.7, order, 1);
        const double p2 = poisson_kernel_laplacian(Point{0.2 * lam}, Point{0.9 * lam}, 0.7 * lam, order, 1);
        out.push_back(check::near(tag("poisson scaling", s), p1 / lam, p2, 1e-14 * p1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// eigen

inline std::vector<SuiteCase> eigen_identity_cases() {
    struct Item {
        int k;
        double s, x;
    };
    std::vector<Item> items;
    for (double s : kSigmas)
        for (int k = 0; k <= 6; ++k)
            for (double x : nine_points()) items.push_back({k, s, x});
    return check::run_cases(
        items.size(), [&](size_t i) { return tag(fmt("eigen h_%g", items[i].k), items[i].s, items[i].x); },
        [&](size_t i) {
            const auto& it = items[i];
            const MultiIndex alpha{it.k};
            const ScalarField f = hermite_field(alpha);
            const Point x{it.x};
            const double h = f(x);
            const double expected = std::pow(alpha.eigenvalue(), it.s) * h;
            return check::near(tag(fmt("eigen h_%g", it.k), it.s, it.x), expected,
                               frac_hermite(f, x, FracOrder(it.s)), 1e-5 * (1.0 + std::fabs(h)));
        });
}

inline std::vector<SuiteCase> eigen_property_cases() {
    std::vector<SuiteCase> out;
    HermiteExpansion e0(1, 40);
    e0.set(MultiIndex{0}, 1.0);
    for (double s : kSigmas) {
        const FracOrder order(s);
        out.push_back(check::near(tag("H^-s {(0):1}", s), 1.0, negative_power(e0, order).get(MultiIndex{0}), 1e-15));
        HermiteExpansion e(1, 40);
        e.set(MultiIndex{1}, 0.5);
        e.set(MultiIndex{4}, -2.0);
        const auto back = negative_power(frac_hermite_spectral(e, order), order);
        for (int k : {1, 4})
            out.push_back(check::near(tag(fmt("H^-s H^s coefficient %g", k), s), e.get(MultiIndex{k}),
                                      back.get(MultiIndex{k}), 1e-14));
    }
    {
        const FracOrder order(0.4);
        HermiteExpansion e(1, 40);
        e.set(MultiIndex{2}, 1.0);
        out.push_back(check::near("H^-s heat vs spectral {(2):1} s=0.4", negative_power(e, order).get(MultiIndex{2}),
                                  negative_power_heat(e, order).get(MultiIndex{2}), 1e-7));
    }
    const auto lin = check::run_cases(
        kSigmas.size(), [&](size_t i) { return tag("linearity", kSigmas[i]); },
        [&](size_t i) {
            const FracOrder order(kSigmas[i]);
            const ScalarField f = hermite_field(MultiIndex{2}), g = gaussian_field(1);
            const double a = 1.5, b = -0.7;
            const Point x{0.4};
            const double lhs = frac_hermite(combine(a, f, b, g), x, order);
            const double rhs = a * frac_hermite(f, x, order) + b * frac_hermite(g, x, order);
            return check::near(tag("linearity", kSigmas[i]), rhs, lhs, 1e-6);
        });
    check::append(out, lin);
    const auto routes = check::run_cases(
        kSigmas.size(), [&](size_t i) { return tag("frac_hermite vs heat route h_3", kSigmas[i]); },
        [&](size_t i) {
            const FracOrder order(kSigmas[i]);
            const ScalarField f = hermite_field(MultiIndex{3});
            const Point x{0.9};
            return check::near(tag("frac_hermite vs heat route h_3", kSigmas[i]), frac_hermite_heat(f, x, order),
                               frac_hermite(f, x, order), 1e-5);
        });
    check::append(out, routes);
    return out;
}

// ---------------------------------------------------------------------------
// routes

inline std::vector<std::string> route_catalog() { return {"gaussian", "bump", "hermite:2", "poly-decay:4", "constant"}; }

inline std::vector<SuiteCase> route_cases() {
    struct Item {
        std::string fn;
        double s, x;
        bool fourier;
    };
    std::vector<Item> items;
    for (const auto& fn : route_catalog())
        for (double s : kSigmas)
            for (double x : nine_points()) items.push_back({fn, s, x, false});
    for (double s : kSigmas)
        for (double x : nine_points()) items.push_back({"gaussian", s, x, true});
    auto id = [&](size_t i) {
        const auto& it = items[i];
        return tag((it.fourier ? "fourier vs routes " : "si vs heat ") + it.fn, it.s, it.x);
    };
    return check::run_cases(items.size(), id, [&](size_t i) {
        const auto& it = items[i];
        const ScalarField f = make_catalog_function(it.fn, 1).field;
        const FracOrder order(it.s);
        const Point x{it.x};
        const double si = frac_laplacian_si(f, x, order);
        const double heat = frac_laplacian_heat(f, x, order);
        if (!it.fourier) return check::near(id(i), heat, si, 1e-5);
        const double oracle = fourier_gaussian_power(it.x, it.s);
        SuiteCase c = check::near(id(i), oracle, std::fabs(si - oracle) > std::fabs(heat - oracle) ? si : heat, 1e-5);
        c.note = "worse of the two routes";
        return c;
    });
}

// ---------------------------------------------------------------------------
// extension

inline std::vector<SuiteCase> subordination_cases() {
    std::vector<SuiteCase> out;
    const FracOrder half(0.5);
    for (int n : {1, 2}) {
        HermiteExpansion e(n, 40);
        for (int k = 0; k <= 10; ++k)
            for (int j = 0; j <= (n == 2 ? k : 0); ++j) {
                MultiIndex a = MultiIndex::zero(n);
                a[0] = k - j;
                if (n == 2) a[1] = j;
                e.set(a, 1.0);
            }
        for (double y : {0.1, 1.0, 3.0}) {
            const auto c = spectral_extension(e, y, half);
            double worst = 0.0;
            for (const auto& [alpha, v] : c.coeffs)
                worst = std::max(worst, std::fabs(v - std::exp(-std::sqrt(alpha.eigenvalue()) * y)));
            out.push_back(check::at_most(fmt("subordination n=%g", n) + fmt(" y=%g max error", y), worst, 1e-10));
        }
    }
    return out;
}

struct ResidualOrders {
    double pde, reflection, cr;
    double pde_coarse, pde_fine;
};

/// Residuals on 9x9 and 17x17 grids of [-1,1] x [0.2,2], compared on the coarse nodes.
inline ResidualOrders residual_orders(const ScalarField& f, const FracOrder& order, OperatorKind kind, bool with_cr) {
    double r[2], rr[2], cr[2] = {1.0, 1.0};
    for (int level = 0; level < 2; ++level) {
        const int m = level == 0 ? 9 : 17;
        const size_t stride = level == 0 ? 1 : 2;
        std::vector<Point> xs;
        for (double x : uniform_grid(-1.0, 1.0, m)) xs.push_back(Point{x});
        const auto ys = uniform_grid(0.2, 2.0, m);
        const auto u = extension_field(f, xs, ys, order, kind);
        r[level] = extension_pde_residual(u, stride);
        rr[level] = reflection_residual(u, stride);
        if (with_cr) cr[level] = cr_residual(u, conjugate_field(f, xs, ys, order, 0), order, stride).max();
    }
    return {std::log2(r[0] / r[1]), std::log2(rr[0] / rr[1]), std::log2(cr[0] / cr[1]), r[0], r[1]};
}

inline std::vector<SuiteCase> residual_order_cases() {
    std::vector<SuiteCase> out;
    const ScalarField f = gaussian_field(1);
    for (auto kind : {OperatorKind::Laplacian, OperatorKind::Hermite})
        for (double s : kSigmas) {
            const std::string k = kind_name(kind);
            try {
                const auto o = residual_orders(f, FracOrder(s), kind, false);
                out.push_back(check::at_least(tag("extension residual order " + k, s), o.pde, 1.8));
                out.push_back(check::at_least(tag("reflection residual order " + k, s), o.reflection, 1.8));
            } catch (const std::exception& e) {
                SuiteCase c{tag("residual orders " + k, s)};
                c.note = e.what();
                out.push_back(c);
            }
        }
    return out;
}

inline std::vector<SuiteCase> extension_property_cases() {
    std::vector<SuiteCase> out;
    const ScalarField g = gaussian_field(1);
    const ScalarField h0 = hermite_field(MultiIndex{0});
    const FracOrder half(0.5);
    for (auto kind : {OperatorKind::Laplacian, OperatorKind::Hermite})
        for (double s : {0.5, 0.75})
            for (double x : {0.0, 0.7}) {
                const std::string id = tag("u(x,1e-4) - f(x) " + kind_name(kind), s, x);
                out.push_back(check::near(id, g(Point{x}), poisson_extend(g, Point{x}, 1e-4, FracOrder(s), kind), 1e-3));
            }
    for (double x : {0.0, 0.8})
        for (double y : {0.5, 1.0, 2.0}) {
            const double expected = std::exp(-y) * h0(Point{x});
            out.push_back(check::near(fmt("hermite h_0 extension x=%g", x) + fmt(" y=%g", y), expected,
                                      poisson_extend(h0, Point{x}, y, half, OperatorKind::Hermite), 1e-7));
        }
    {
        const double conv = gaussian_convolution(0.0, [](double d) { return 1.0 / kPi / (d * d + 1.0); });
        out.push_back(check::near("laplacian s=0.5 u(0,1) vs classical kernel", conv,
                                  poisson_extend(g, Point{0.0}, 1.0, half, OperatorKind::Laplacian), 1e-6));
    }
    {
        HermiteExpansion e(1, 40);
        e.set(MultiIndex{0}, 1.0);
        e.set(MultiIndex{2}, 0.5);
        e.set(MultiIndex{3}, -0.3);
        const ScalarField f = expansion_field(e);
        for (double s : kSigmas)
            for (double y : {0.3, 1.2}) {
                const FracOrder order(s);
                const double spectral = spectral_extension(e, y, order)(Point{0.6});
                out.push_back(check::near(tag("spectral vs poisson_extend", s) + fmt(" y=%g", y), spectral,
                                          poisson_extend(f, Point{0.6}, y, order, OperatorKind::Hermite), 1e-5));
            }
    }
    for (auto kind : {OperatorKind::Laplacian, OperatorKind::Hermite})
        for (double x : {0.0, 1.0}) {
            double umax = 0.0, hmax = std::fabs(g(Point{x}));
            for (double y : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0})
                umax = std::max(umax, std::fabs(poisson_extend(g, Point{x}, y, half, kind)));
            for (double t : {1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0})
                hmax = std::max(hmax, std::fabs(heat_semigroup(g, Point{x}, t, kind)));
            out.push_back(check::at_most("contraction " + kind_name(kind) + fmt(" x=%g", x), umax, hmax + 1e-8));
        }
    {
        // fundamental solution: symmetry, closed form against t-quadrature, and the Poisson-kernel relation
        for (double s : kSigmas) {
            const FracOrder order(s);
            const Point x{0.3}, z{-0.8};
            const double a = fundamental_solution(x, z, 0.4, order, OperatorKind::Hermite);
            const double b = fundamental_solution(z, x, 0.4, order, OperatorKind::Hermite);
            out.push_back(check::near(tag("fundamental solution symmetry", s), a, b, 1e-14 * std::fabs(a)));
        }
        const FracOrder quarter(0.25);
        const double r = 1.3;
        auto q = integrate_halfline<double>(
            [&](double t) {
                if (!(t > 0.0)) return 0.0;
                return std::exp(-0.5 * std::log(4.0 * kPi * t) - r * r / (4.0 * t) + (0.25 - 1.0) * std::log(t));
            },
            0.0, 1.0, 1e-16, 1e-13, 10);
        out.push_back(check::near("fundamental solution n=1 order 0.25 y=0 vs t-quadrature",
                                  q.value / quarter.gamma_sigma(),
                                  fundamental_solution(Point{0.0}, Point{r}, 0.0, quarter, OperatorKind::Laplacian),
                                  1e-7));
        for (double s : {0.6, 0.75}) {
            const FracOrder order(s), dual(1.0 - s);
            const Point x{0.0}, z{0.9};
            const double y = 0.7, h = 1e-4;
            const double dpsi = (fundamental_solution(x, z, y + h, dual, OperatorKind::Laplacian) -
                                 fundamental_solution(x, z, y - h, dual, OperatorKind::Laplacian)) /
                                (2.0 * h);
            const double c = -std::pow(4.0, 1.0 - s) * gamma(1.0 - s) / (2.0 * gamma(s));
            const double p = poisson_kernel_laplacian(x, z, y, order, 1);
            out.push_back(check::near(tag("fundamental solution y-derivative vs poisson kernel", s), p,
                                      c * std::pow(y, 2.0 * s - 1.0) * dpsi, 1e-4 * std::max(1.0, p)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// neumann

inline std::vector<SuiteCase> neumann_route_cases() {
    struct Item {
        int k;
        double s, x;
        TraceRoute route;
    };
    std::vector<Item> items;
    for (double s : kSigmas)
        for (int k = 0; k <= 3; ++k)
            for (double x : {0.3, 0.9, 1.5})
                for (auto r : {TraceRoute::Integral, TraceRoute::Regression}) items.push_back({k, s, x, r});
    auto id = [&](size_t i) {
        const auto& it = items[i];
        return tag(fmt("trace h_%g ", it.k) + route_name(it.route), it.s, it.x);
    };
    return check::run_cases(items.size(), id, [&](size_t i) {
        const auto& it = items[i];
        const FracOrder order(it.s);
        const MultiIndex alpha{it.k};
        const ScalarField f = hermite_field(alpha);
        const Point x{it.x};
        const double expected = order.trace_const() * std::pow(alpha.eigenvalue(), it.s) * f(x);
        const auto t = neumann_trace(f, x, order, OperatorKind::Hermite, it.route);
        return check::near(id(i), expected, t.limit_value, 1e-2 * std::fabs(expected));
    });
}

inline std::vector<SuiteCase> neumann_example_cases() {
    std::vector<SuiteCase> out;
    HermiteExpansion e(1, 40);
    e.set(MultiIndex{0}, 1.0);
    const ScalarField h0 = hermite_field(MultiIndex{0});
    for (double s : kSigmas) {
        const FracOrder order(s);
        const Point x{0.4};
        const double expected = order.trace_const() * h0(x);
        for (auto r : {TraceRoute::Integral, TraceRoute::Regression})
            out.push_back(check::near(tag("trace of expansion {(0):1} " + route_name(r), s), expected,
                                      neumann_trace(e, x, order, r).limit_value, 1e-2 * std::fabs(expected)));
        out.push_back(check::near(tag("trace of constant, laplacian", s), 0.0,
                                  neumann_trace(constant_field(1), Point{0.5}, order, OperatorKind::Laplacian,
                                                TraceRoute::Integral)
                                      .limit_value,
                                  1e-10));
    }
    const FracOrder half(0.5);
    const ScalarField g = gaussian_field(1);
    out.push_back(check::near("gaussian trace s=0.5 vs operators module",
                              half.trace_const() * frac_laplacian_si(g, Point{0.0}, half),
                              neumann_trace(g, Point{0.0}, half, OperatorKind::Laplacian, TraceRoute::Integral).limit_value,
                              1e-5));
    return out;
}

// ---------------------------------------------------------------------------
// conjugate

inline std::vector<SuiteCase> cr_order_cases() {
    std::vector<SuiteCase> out;
    const ScalarField f = gaussian_field(1);
    for (double s : kSigmas) {
        try {
            const auto o = residual_orders(f, FracOrder(s), OperatorKind::Laplacian, true);
            out.push_back(check::at_least(tag("cauchy-riemann residual order", s), o.cr, 1.8));
        } catch (const std::exception& e) {
            SuiteCase c{tag("cauchy-riemann residual order", s)};
            c.note = e.what();
            out.push_back(c);
        }
    }
    return out;
}

inline std::vector<SuiteCase> conjugate_limit_cases() {
    std::vector<SuiteCase> out;
    const ScalarField f = gaussian_field(1);
    for (double s : kSigmas)
        for (double x : {-0.7, 0.5, 1.0}) {
            const FracOrder order(s);
            const double oracle =
                -2.0 * gamma(1.0 - s) / (std::pow(4.0, s) * order.gamma_sigma()) * fourier_gaussian_riesz(x, s);
            out.push_back(check::near(tag("conjugate boundary limit", s, x), oracle,
                                      conjugate_boundary_limit(f, Point{x}, order, 0), 1e-4));
        }
    return out;
}

inline std::vector<SuiteCase> conjugate_example_cases() {
    std::vector<SuiteCase> out;
    const ScalarField f = gaussian_field(1);
    for (double s : kSigmas)
        for (double y : {0.5, 2.0})
            out.push_back(check::near(tag("conjugate of even field at 0", s) + fmt(" y=%g", y), 0.0,
                                      conjugate_poisson(f, Point{0.0}, y, FracOrder(s), 0), 1e-10));
    const FracOrder half(0.5);
    for (auto [x, y] : {std::array<double, 2>{0.5, 0.5}, {1.0, 1.0}, {-1.5, 0.3}}) {
        const double yy = y;
        const double conv = gaussian_convolution(x, [yy](double d) { return d / (kPi * (d * d + yy * yy)); });
        out.push_back(check::near(fmt("conjugate s=0.5 vs classical kernel x=%g", x) + fmt(" y=%g", y), conv,
                                  conjugate_poisson(f, Point{x}, y, half, 0), 1e-6));
    }
    bool unsupported = false;
    try {
        conjugate_poisson(f, Point{0.5}, 1.0, half, 0, OperatorKind::Hermite);
    } catch (const UnsupportedError&) {
        unsupported = true;
    }
    out.push_back(check::predicate("conjugate for hermite is unsupported", 0.0, unsupported, "UnsupportedError"));
    return out;
}

// ---------------------------------------------------------------------------
// principles

inline std::vector<SuiteCase> principle_cases(const SuiteConfig& cfg) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> point(-1.0, 1.0);
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> pick_sigma(0, 2);
    struct Item {
        double x0, s;
        std::vector<VanishingTerm> terms;
        int base;  // -1: maximum principle; otherwise catalog base for a comparison pair
    };
    std::vector<Item> items;
    for (int k = 0; k < cfg.principle_functions; ++k) {
        const double x0 = point(rng), s = kSigmas[pick_sigma(rng)];
        items.push_back({x0, s, random_terms(rng), -1});
    }
    for (int k = 0; k < cfg.comparison_pairs; ++k) {
        const double x0 = point(rng), s = kSigmas[pick_sigma(rng)];
        auto terms = random_terms(rng);
        items.push_back({x0, s, std::move(terms), pick(rng)});
    }
    auto id = [&](size_t i) {
        const auto& it = items[i];
        return tag(it.base < 0 ? fmt("maximum principle #%g", static_cast<double>(i))
                               : fmt("comparison #%g", static_cast<double>(i - cfg.principle_functions)),
                   it.s, it.x0);
    };
    return check::run_cases(items.size(), id, [&](size_t i) {
        const auto& it = items[i];
        const FracOrder order(it.s);
        const Point x0{it.x0};
        const ScalarField phi = vanishing_field(it.x0, it.terms);
        if (it.base < 0) {
            const auto r = check_maximum_principle(phi, x0, order);
            return check::at_most(id(i), r.value, 1e-8);
        }
        const ScalarField g = it.base == 0 ? gaussian_field(1) : hermite_field(MultiIndex{it.base - 1});
        const ScalarField f = combine(1.0, g, 1.0, phi);
        assert_nonnegative_sampled(phi, x0);
        return check::at_most(id(i), frac_hermite(f, x0, order), frac_hermite(g, x0, order) + 1e-8);
    });
}

/// -int f(z) F_sigma(0, z) dz for an even field, by quadrature on (0, inf).
inline double kernel_pairing_at_zero(const ScalarField& f, const FracOrder& order) {
    auto g = [&](double z) {
        // the integrand behaves like z^{1-2 sigma} at the origin
        if (!(z > 1e-30)) return 0.0;
        const double fz = f(Point{z});
        return fz == 0.0 ? 0.0 : -2.0 * fz * f_sigma_kernel(Point{0.0}, Point{z}, order);
    };
    double total = tanh_sinh<double>([&](double z, double, double) { return g(z); }, 0.0, 1.0, 1e-14, 1e-11, 9).value;
    for (double a = 1.0; a < 16.0; a += 1.0) total += gauss_legendre_adaptive<double>(g, a, a + 1.0, 1e-14, 1e-11).value;
    return total;
}

inline std::vector<SuiteCase> principle_example_cases() {
    std::vector<SuiteCase> out;
    const FracOrder half(0.5);
    const Point x0{0.0};
    ScalarField a;
    a.eval = [](const Point& z) { return z[0] * z[0] * std::exp(-z[0] * z[0]); };
    a.decay = DecayInfo::schwartz(2.0 / std::exp(1.0), 0.5, 0.0);
    a.length_scale = 0.5;
    out.push_back(check::at_most("maximum principle z^2 e^{-z^2} s=0.5", check_maximum_principle(a, x0, half).value, 0.0));
    const ScalarField zero = constant_field(1, 0.0);
    out.push_back(check::near("maximum principle f = 0", 0.0, check_maximum_principle(zero, x0, half).value, 1e-14));
    ScalarField c;
    // 1 - cos z = 2 sin^2(z/2), without cancellation where the kernel is large
    c.eval = [](const Point& z) {
        const double h = std::sin(0.5 * z[0]);
        return 2.0 * h * h * std::exp(-0.25 * z[0] * z[0]);
    };
    c.decay = DecayInfo::schwartz(2.0, 0.25, 0.0);
    c.length_scale = 0.5;
    for (double s : kSigmas) {
        const FracOrder order(s);
        const double value = check_maximum_principle(c, x0, order).value;
        out.push_back(check::at_most(tag("maximum principle (1-cos z) e^{-z^2/4}", s), value, 0.0));
        out.push_back(check::near(tag("(1-cos z) e^{-z^2/4} vs -int f F", s), kernel_pairing_at_zero(c, order), value,
                                  1e-5));
    }
    return out;
}

// ---------------------------------------------------------------------------
// limits

inline std::vector<SuiteCase> sigma_limit_cases() {
    std::vector<SuiteCase> out;
    const ScalarField g = gaussian_field(1);
    for (double x : {0.0, 0.7}) {
        const double minus_lap = (1.0 - x * x) * std::exp(-0.5 * x * x);
        double prev = 1e300;
        bool monotone = true;
        double last = 0.0;
        for (double s : {0.9, 0.99, 0.999}) {
            last = std::fabs(frac_laplacian_si(g, Point{x}, FracOrder(s)) - minus_lap);
            out.push_back(check::info(tag("sigma -> 1 error", s, x), last));
            monotone = monotone && last < prev;
            prev = last;
        }
        out.push_back(check::predicate(fmt("sigma -> 1 errors decrease x=%g", x), last, monotone, "monotone"));
        out.push_back(check::at_most(fmt("sigma -> 1 final error x=%g", x), last, 1e-2));
    }
    return out;
}

inline std::vector<SuiteCase> mode_limit_cases() {
    std::vector<SuiteCase> out;
    for (double s : kSigmas) {
        const FracOrder order(s);
        const double lambda = 3.0, q = std::sqrt(lambda);
        const double d0 = neumann_mode_at_zero(lambda, order);
        out.push_back(check::near(tag("neumann mode y->0", s), d0, neumann_mode(lambda, 1e-8, order), 1e-9 * d0));
        // y^{1-2s} d'(y) with d' = e^{-qR} q y^s I_{1-s}(q y)
        auto flux = [&](double y) {
            return std::pow(y, 1.0 - 2.0 * s) * std::exp(-q) * q * std::pow(y, s) * bessel_i(1.0 - s, q * y);
        };
        const double f2 = flux(1e-2), f3 = flux(1e-3), f4 = flux(1e-4);
        out.push_back(check::predicate(tag("neumann mode flux decreasing", s), f4, f2 > f3 && f3 > f4, "decreasing"));
        out.push_back(check::near(tag("neumann mode flux rate", s), 2.0 - 2.0 * s, std::log10(f3 / f4), 1e-3));
        double res = 0.0, scale = 0.0;
        const double h = 1e-3;
        for (double y = 0.1; y <= 2.0 + 1e-12; y += 0.1) {
            const double dm = neumann_mode(lambda, y - h, order), d = neumann_mode(lambda, y, order),
                         dp = neumann_mode(lambda, y + h, order);
            const double r = -lambda * d + (1.0 - 2.0 * s) / y * (dp - dm) / (2 * h) + (dp - 2 * d + dm) / (h * h);
            res = std::max(res, std::fabs(r));
            scale = std::max(scale, lambda * std::fabs(d));
        }
        out.push_back(check::at_most(tag("neumann mode ODE residual", s), res, 1e-5 * scale));
    }
    for (double s : {0.5, 0.75}) {
        HermiteExpansion e(1, 40);
        for (int k = 0; k <= 5; ++k) e.set(MultiIndex{k}, 1.0 + k);
        const auto c = spectral_extension(e, 1e-6, FracOrder(s));
        double worst = 0.0;
        for (const auto& [alpha, v] : c.coeffs) worst = std::max(worst, std::fabs(v / e.get(alpha) - 1.0));
        out.push_back(check::at_most(tag("spectral extension y=1e-6 ratio", s), worst, 1e-4));
    }
    return out;
}

// ---------------------------------------------------------------------------
// harnack probe

/// sup/inf of nonnegative Hermite extensions over the half ball of radius 1/2 about the origin.
inline std::vector<SuiteCase> harnack_cases(const SuiteConfig& cfg) {
    std::mt19937 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> weight(0.2, 2.0), rate(0.3, 1.5), center(-1.5, 1.5);
    std::vector<std::vector<VanishingTerm>> fields(cfg.harnack_functions);
    for (auto& terms : fields) {
        terms.resize(2);
        for (auto& t : terms) t = {weight(rng), rate(rng), center(rng)};
    }
    std::vector<std::array<double, 2>> nodes;
    for (double x = -0.45; x <= 0.45 + 1e-12; x += 0.15)
        for (double y = 0.05; y <= 0.45 + 1e-12; y += 0.1)
            if (x * x + y * y < 0.25) nodes.push_back({x, y});
    const FracOrder half(0.5);
    auto id = [](size_t i) { return fmt("harnack quotient #%g", static_cast<double>(i)); };
    return check::run_cases(fields.size(), id, [&](size_t i) {
        ScalarField f;
        const auto terms = fields[i];
        f.eval = [terms](const Point& z) {
            double s = 0.0;
            for (const auto& t : terms) s += t.weight * std::exp(-t.rate * (z[0] - t.center) * (z[0] - t.center));
            return s;
        };
        double amp = 0.0, r = 1e300, r0 = 0.0;
        for (const auto& t : terms) {
            amp += t.weight;
            r = std::min(r, t.rate);
            r0 = std::max(r0, std::fabs(t.center));
        }
        f.decay = DecayInfo::schwartz(amp, r, r0);
        double hi = 0.0, lo = 1e300;
        for (const auto& nd : nodes) {
            const double u = poisson_extend(f, Point{nd[0]}, nd[1], half, OperatorKind::Hermite);
            hi = std::max(hi, u);
            lo = std::min(lo, u);
        }
        SuiteCase c = check::info(id(i), hi / lo, fmt("sup %.6e", hi) + fmt(" inf %.6e", lo));
        if (!std::isfinite(hi / lo)) c.status = CaseStatus::Fail;
        return c;
    });
}

} // namespace checks

} // namespace fracext
