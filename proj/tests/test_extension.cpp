#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fracext/catalog.hpp"
#include "fracext/extension.hpp"
#include "fracext/operators.hpp"
#include "oracles.hpp"

using namespace fracext;

namespace {

std::vector<Point> line(double a, double b, int m) {
    std::vector<Point> xs;
    for (double v : uniform_grid(a, b, m)) xs.push_back(Point{v});
    return xs;
}

ExtensionField filled(const std::vector<Point>& xs, const std::vector<double>& ys, double sigma,
                      const std::function<double(double, double)>& g) {
    ExtensionField u;
    u.order = FracOrder(sigma);
    u.x_grid = xs;
    u.y_grid = ys;
    for (const auto& x : xs)
        for (double y : ys) u.values.push_back(g(x[0], y));
    return u;
}

} // namespace

TEST(PoissonExtend, BoundaryValue) {
    // at sigma = 0.25 the gap u(x,y) - f(x) ~ y^{2 sigma} = 1e-2 exceeds the budget
    const auto g = gaussian_field(1);
    for (double s : {0.5, 0.75})
        for (auto kind : {OperatorKind::Laplacian, OperatorKind::Hermite})
            for (double x : {0.0, 0.8})
                EXPECT_NEAR(poisson_extend(g, Point{x}, 1e-4, FracOrder(s), kind), g(Point{x}), 1e-3)
                    << s << " " << kind_name(kind) << " x=" << x;
}

TEST(PoissonExtend, HarmonicExtensionIsPoissonConvolution) {
    const double u = poisson_extend(gaussian_field(1), Point{0.0}, 1.0, FracOrder(0.5), OperatorKind::Laplacian);
    EXPECT_NEAR(u, oracle::harmonic_ext_gauss_0_1, 1e-6);
}

TEST(PoissonExtend, EigenfunctionDecaysLikeBesselProfile) {
    const auto h1 = hermite_field(MultiIndex{1});
    FracOrder o(0.4);
    for (double y : {0.3, 1.0, 2.5}) {
        const double expected = bessel_profile(std::sqrt(3.0) * y, o) * h1(Point{0.7});
        EXPECT_NEAR(poisson_extend(h1, Point{0.7}, y, o, OperatorKind::Hermite), expected, 1e-8) << y;
    }
}

TEST(PoissonExtend, RejectsNonPositiveY) {
    EXPECT_THROW(poisson_extend(gaussian_field(1), Point{0.0}, 0.0, FracOrder(0.5), OperatorKind::Hermite), DomainError);
}

TEST(PoissonKernel, LaplacianExamples) {
    FracOrder half(0.5);
    EXPECT_NEAR(poisson_kernel_laplacian(Point{0.3}, Point{0.3}, 1.0, half, 1), 1.0 / kPi, 1e-15);
    EXPECT_NEAR(poisson_kernel(Point{0.0}, Point{2.0}, 1.0, half, OperatorKind::Laplacian), 1.0 / (5.0 * kPi), 1e-15);
    EXPECT_THROW(poisson_kernel_laplacian(Point{0.0}, Point{0.0}, 0.0, half, 1), DomainError);
}

TEST(PoissonKernel, LaplacianKernelHasUnitMass) {
    for (double s : {0.25, 0.75}) {
        FracOrder o(s);
        // z = tan(theta) maps the line onto (-pi/2, pi/2) with an integrable endpoint singularity
        auto q = tanh_sinh<double>(
            [&](double th, double, double) {
                const double c = std::cos(th);
                return poisson_kernel_laplacian(Point{0.0}, Point{std::tan(th)}, 1.0, o, 1) / (c * c);
            },
            -0.5 * kPi, 0.5 * kPi, 1e-12, 1e-12, 12);
        EXPECT_NEAR(q.value, 1.0, 1e-6) << s;
    }
}

TEST(PoissonKernel, HermiteKernelReproducesExtension) {
    FracOrder o(0.5);
    const auto g = gaussian_field(1);
    const double y = 0.8, x = 0.3;
    double conv = 0.0;
    const double h = 0.01;
    for (double z = -10.0; z <= 10.0 + 1e-12; z += h)
        conv += poisson_kernel(Point{x}, Point{z}, y, o, OperatorKind::Hermite) * g(Point{z});
    EXPECT_NEAR(conv * h, poisson_extend(g, Point{x}, y, o, OperatorKind::Hermite), 1e-7);
}

TEST(SpectralExtension, SmallYRecoversCoefficients) {
    HermiteExpansion e(1, 10);
    e.set(MultiIndex{0}, 1.0);
    e.set(MultiIndex{3}, -0.4);
    // the ratio is 1 - O(y^{2 sigma}); at sigma = 0.25 and y = 1e-6 that is about 2e-3
    for (double s : {0.5, 0.75}) {
        const auto c = spectral_extension(e, 1e-6, FracOrder(s));
        for (const auto& [alpha, v] : e.coeffs) EXPECT_NEAR(c.get(alpha) / v, 1.0, 1e-4) << s;
    }
}

TEST(SpectralExtension, AgreesWithPoissonExtend) {
    HermiteExpansion e(1, 10);
    e.set(MultiIndex{0}, 0.6);
    e.set(MultiIndex{2}, 1.0);
    ScalarField f = hermite_field(MultiIndex{2});
    f.eval = [e](const Point& z) { return e(z); };
    FracOrder o(0.3);
    for (double x : {-1.0, 0.2})
        for (double y : {0.1, 1.0}) {
            const double spectral = spectral_extension(e, y, o)(Point{x});
            EXPECT_NEAR(spectral, poisson_extend(f, Point{x}, y, o, OperatorKind::Hermite), 1e-5) << x << "," << y;
        }
}

TEST(NeumannTrace, GroundStateExpansion) {
    HermiteExpansion e(1, 10);
    e.set(MultiIndex{0}, 1.0);
    for (double s : {0.25, 0.5, 0.75}) {
        FracOrder o(s);
        const double expected = o.trace_const() * hermite_function_1d(0, 0.4);
        EXPECT_NEAR(neumann_trace(e, Point{0.4}, o, TraceRoute::Integral).limit_value, expected,
                    1e-8 * std::fabs(expected))
            << s;
        // extrapolation in y is accurate to a few parts in 1e5
        EXPECT_NEAR(neumann_trace(e, Point{0.4}, o, TraceRoute::Regression).limit_value, expected,
                    1e-4 * std::fabs(expected))
            << s;
    }
}

TEST(NeumannTrace, TraceConstant) {
    EXPECT_NEAR(FracOrder(0.25).trace_const(), oracle::trace_const_0p25, 1e-14);
    EXPECT_NEAR(FracOrder(0.5).trace_const(), oracle::trace_const_0p5, 1e-14);
    EXPECT_NEAR(FracOrder(0.75).trace_const(), oracle::trace_const_0p75, 1e-14);
}

TEST(NeumannTrace, ConstantHasZeroTrace) {
    const auto t = neumann_trace(constant_field(1), Point{0.3}, FracOrder(0.5), OperatorKind::Laplacian,
                                 TraceRoute::Integral);
    EXPECT_NEAR(t.limit_value, 0.0, 1e-12);
}

TEST(NeumannTrace, GaussianMatchesOperatorsModule) {
    FracOrder o(0.5);
    const auto g = gaussian_field(1);
    const double expected = o.trace_const() * frac_laplacian_si(g, Point{0.0}, o);
    EXPECT_NEAR(expected, o.trace_const() * oracle::frac_lap_gauss_0p5_0, 1e-7);
    EXPECT_NEAR(neumann_trace(g, Point{0.0}, o, OperatorKind::Laplacian, TraceRoute::Integral).limit_value, expected,
                1e-5);
    EXPECT_NEAR(neumann_trace(g, Point{0.0}, o, OperatorKind::Laplacian, TraceRoute::Regression).limit_value,
                expected, 1e-4 * std::fabs(expected));
}

TEST(FundamentalSolution, Symmetric) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2), py(0.1, 1.5);
    FracOrder o(0.35);
    for (int k = 0; k < 8; ++k) {
        const Point x{u(rng)}, z{u(rng)};
        const double y = py(rng);
        const double a = fundamental_solution(x, z, y, o, OperatorKind::Hermite);
        const double b = fundamental_solution(z, x, y, o, OperatorKind::Hermite);
        EXPECT_NEAR(a, b, 1e-10 * std::fabs(a));
    }
}

TEST(FundamentalSolution, LaplacianClosedFormMatchesTQuadrature) {
    // order 0.25 in n = 1; the order-0.75 potential diverges in one dimension
    EXPECT_NEAR(fundamental_solution(Point{0.0}, Point{1.3}, 0.0, FracOrder(0.25), OperatorKind::Laplacian),
                oracle::fundamental_lap_n1_order0p25_r1p3, 1e-7);
    EXPECT_THROW(fundamental_solution(Point{0.0}, Point{1.3}, 0.0, FracOrder(0.75), OperatorKind::Laplacian),
                 DomainError);
    EXPECT_THROW(fundamental_solution(Point{0.5}, Point{0.5}, 0.0, FracOrder(0.25), OperatorKind::Hermite),
                 SingularityError);
}

TEST(FundamentalSolution, YDerivativeGivesPoissonKernel) {
    // P^sigma_y = C y^{2 sigma - 1} d_y Psi^{1-sigma} with Psi of order 1 - sigma
    const double s = 0.75, n = 1.0;
    FracOrder o(s), dual(1.0 - s);
    const double psi_const = std::pow(4.0, s - 1.0) * fracext::gamma(0.5 * n - 1.0 + s) / std::pow(kPi, 0.5 * n) /
                             fracext::gamma(1.0 - s);
    const double p_const = fracext::gamma(0.5 * n + s) / (std::pow(kPi, 0.5 * n) * fracext::gamma(s));
    const double C = p_const / ((2.0 * (1.0 - s) - n) * psi_const);
    for (double y : {0.3, 1.0})
        for (double d : {0.0, 0.7}) {
            const double h = 1e-4 * y;
            const double dpsi = (fundamental_solution(Point{0.0}, Point{d}, y + h, dual, OperatorKind::Laplacian) -
                                 fundamental_solution(Point{0.0}, Point{d}, y - h, dual, OperatorKind::Laplacian)) /
                                (2 * h);
            const double P = poisson_kernel_laplacian(Point{0.0}, Point{d}, y, o, 1);
            EXPECT_NEAR(C * std::pow(y, 2 * s - 1) * dpsi, P, 1e-4 * P) << y << "," << d;
        }
}

TEST(FundamentalSolution, HermiteBelowLaplacian) {
    // the Mehler kernel is dominated by the Gauss-Weierstrass kernel
    FracOrder o(0.25);
    for (double d : {0.4, 1.5})
        EXPECT_LT(fundamental_solution(Point{0.0}, Point{d}, 0.2, o, OperatorKind::Hermite),
                  fundamental_solution(Point{0.0}, Point{d}, 0.2, o, OperatorKind::Laplacian));
}

TEST(ConjugatePoisson, OddAtOriginForEvenData) {
    for (double y : {0.2, 1.0})
        EXPECT_NEAR(conjugate_poisson(gaussian_field(1), Point{0.0}, y, FracOrder(0.5), 0), 0.0, 1e-12) << y;
}

TEST(ConjugatePoisson, HalfOrderIsClassicalConjugate) {
    EXPECT_NEAR(conjugate_poisson(gaussian_field(1), Point{0.5}, 0.5, FracOrder(0.5), 0), oracle::conjugate_half_0p5_0p5,
                1e-6);
    EXPECT_NEAR(conjugate_poisson(gaussian_field(1), Point{1.0}, 1.0, FracOrder(0.5), 0), oracle::conjugate_half_1_1,
                1e-6);
}

TEST(ConjugatePoisson, BoundaryLimitMatchesFourierOracle) {
    const double ref[] = {oracle::conjugate_limit_0p25_0p5, oracle::conjugate_limit_0p5_0p5,
                          oracle::conjugate_limit_0p75_0p5};
    const double sigmas[] = {0.25, 0.5, 0.75};
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(conjugate_boundary_limit(gaussian_field(1), Point{0.5}, FracOrder(sigmas[i]), 0), ref[i], 1e-4)
            << sigmas[i];
}

TEST(ConjugatePoisson, OnlyLaplacian) {
    EXPECT_THROW(conjugate_poisson(gaussian_field(1), Point{0.0}, 1.0, FracOrder(0.5), 0, OperatorKind::Hermite),
                 UnsupportedError);
    EXPECT_THROW(conjugate_poisson(gaussian_field(1), Point{0.0}, 1.0, FracOrder(0.5), 1), DomainError);
}

TEST(CrResidual, ZeroPairHasZeroResidual) {
    const auto xs = line(-1, 1, 7);
    const auto ys = uniform_grid(0.5, 1.5, 6);
    const auto zero = filled(xs, ys, 0.5, [](double, double) { return 0.0; });
    const auto r = cr_residual(zero, zero, FracOrder(0.5));
    EXPECT_EQ(r.max(), 0.0);
}

TEST(CrResidual, DetectsPerturbedConjugate) {
    // u = x, v = y^{2-2 sigma}/(2-2 sigma) solve the system exactly
    for (double s : {0.3, 0.5, 0.8}) {
        const auto xs = line(-1, 1, 9);
        const auto ys = uniform_grid(0.5, 1.5, 9);
        const auto u = filled(xs, ys, s, [](double x, double) { return x; });
        const auto v = filled(xs, ys, s, [s](double, double y) { return std::pow(y, 2 - 2 * s) / (2 - 2 * s); });
        EXPECT_LT(cr_residual(u, v, FracOrder(s)).max(), 1e-2) << s;
        const double eps = 0.1;
        const auto vp = filled(xs, ys, s, [s, eps](double x, double y) { return std::pow(y, 2 - 2 * s) / (2 - 2 * s) + eps * x; });
        EXPECT_GE(cr_residual(u, vp, FracOrder(s)).max(), eps / 2) << s;
    }
}

TEST(CrResidual, CoarseGridIsDomainError) {
    const auto u = filled(line(-1, 1, 4), uniform_grid(0.5, 1.5, 6), 0.5, [](double, double) { return 0.0; });
    EXPECT_THROW(cr_residual(u, u, FracOrder(0.5)), DomainError);
}

TEST(ExtensionResidual, SpectralModeSolvesThePde) {
    // u = bessel_profile(sqrt(3) y) h_1(x) solves the Hermite extension equation exactly
    for (double s : {0.25, 0.75}) {
        FracOrder o(s);
        auto at = [&](int m) {
            auto u = filled(line(-1, 1, m), uniform_grid(0.2, 2.0, m), s,
                            [&](double x, double y) { return bessel_profile(std::sqrt(3.0) * y, o) * hermite_function_1d(1, x); });
            u.kind = OperatorKind::Hermite;
            return std::array<double, 2>{extension_pde_residual(u, m == 17 ? 1 : 2), reflection_residual(u, m == 17 ? 1 : 2)};
        };
        const auto coarse = at(17), fine = at(33);
        for (int k = 0; k < 2; ++k) EXPECT_GE(std::log2(coarse[k] / fine[k]), 1.8) << s << " " << k;
    }
}

TEST(NeumannMode, LimitAtZero) {
    for (double s : {0.25, 0.5, 0.75}) {
        FracOrder o(s);
        const double d0 = neumann_mode_at_zero(4.0, o);
        EXPECT_GT(d0, 0.0);
        EXPECT_NEAR(neumann_mode(4.0, 1e-8, o), d0, 1e-6 * d0) << s;
    }
}

TEST(NeumannMode, WeightedDerivativeVanishes) {
    for (double s : {0.25, 0.5, 0.75}) {
        FracOrder o(s);
        auto flux = [&](double y) {
            const double h = 1e-3 * y;
            return std::pow(y, 1 - 2 * s) * (neumann_mode(2.0, y + h, o) - neumann_mode(2.0, y - h, o)) / (2 * h);
        };
        const double f2 = flux(1e-2), f3 = flux(1e-3), f4 = flux(1e-4);
        EXPECT_LT(std::fabs(f3), std::fabs(f2));
        EXPECT_LT(std::fabs(f4), std::fabs(f3));
        // each decade shrinks the flux by 10^{2 - 2 sigma}
        EXPECT_NEAR(std::log10(f3 / f4), 2 - 2 * s, 0.05) << s;
    }
}
