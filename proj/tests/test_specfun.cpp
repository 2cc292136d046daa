#include <gtest/gtest.h>

#include <cmath>

#include "fracext/specfun.hpp"
#include "oracles.hpp"

using namespace fracext;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double trapezoid(double a, double b, int m, const std::function<double(double)>& g) {
    const double h = (b - a) / m;
    double s = 0.5 * (g(a) + g(b));
    for (int i = 1; i < m; ++i) s += g(a + i * h);
    return s * h;
}

} // namespace

TEST(Gamma, TabulatedValues) {
    EXPECT_DOUBLE_EQ(fracext::gamma(1.0), 1.0);
    EXPECT_LT(rel(fracext::gamma(0.5), oracle::gamma_0p5), 1e-14);
    EXPECT_LT(rel(fracext::gamma(-0.5), oracle::gamma_m0p5), 1e-14);
    EXPECT_LT(rel(fracext::gamma(0.3), oracle::gamma_0p3), 1e-14);
    EXPECT_LT(rel(fracext::gamma(-0.3), oracle::gamma_m0p3), 1e-14);
    EXPECT_LT(rel(fracext::gamma(2.7), oracle::gamma_2p7), 1e-14);
    EXPECT_LT(rel(fracext::gamma(7.5), oracle::gamma_7p5), 1e-14);
    EXPECT_LT(rel(fracext::gamma(-1.25), oracle::gamma_m1p25), 1e-14);
    EXPECT_LT(rel(fracext::gamma(0.01), oracle::gamma_0p01), 1e-14);
}

TEST(Gamma, NegativeSigmaConvention) {
    for (double s : {0.1, 0.25, 0.5, 0.75, 0.9})
        EXPECT_NEAR(fracext::gamma(-s), fracext::gamma(1.0 - s) / (-s), 1e-13 * std::fabs(fracext::gamma(-s)));
}

TEST(Gamma, PolesAreDomainErrors) {
    EXPECT_THROW(fracext::gamma(0.0), DomainError);
    EXPECT_THROW(fracext::gamma(-1.0), DomainError);
    EXPECT_THROW(fracext::gamma(-7.0), DomainError);
}

TEST(BesselK, HalfOrderClosedForm) {
    EXPECT_NEAR(bessel_k(0.5, 1.0), std::sqrt(kPi / 2.0) * std::exp(-1.0), 1e-14);
    EXPECT_NEAR(bessel_k(0.5, 1.0), 0.4610685, 1e-7);
}

TEST(BesselK, OracleGrid) {
    const double nus[] = {0.25, 0.3, 0.5, 0.7, 0.75};
    const double zs[] = {1e-4, 0.1, 1.0, 1.9, 2.1, 5.0, 30.0};
    const double ref[5][7] = {
        {oracle::bessel_k_0p25_0p0001, oracle::bessel_k_0p25_0p1, oracle::bessel_k_0p25_1, oracle::bessel_k_0p25_1p9,
         oracle::bessel_k_0p25_2p1, oracle::bessel_k_0p25_5, oracle::bessel_k_0p25_30},
        {oracle::bessel_k_0p3_0p0001, oracle::bessel_k_0p3_0p1, oracle::bessel_k_0p3_1, oracle::bessel_k_0p3_1p9,
         oracle::bessel_k_0p3_2p1, oracle::bessel_k_0p3_5, oracle::bessel_k_0p3_30},
        {oracle::bessel_k_0p5_0p0001, oracle::bessel_k_0p5_0p1, oracle::bessel_k_0p5_1, oracle::bessel_k_0p5_1p9,
         oracle::bessel_k_0p5_2p1, oracle::bessel_k_0p5_5, oracle::bessel_k_0p5_30},
        {oracle::bessel_k_0p7_0p0001, oracle::bessel_k_0p7_0p1, oracle::bessel_k_0p7_1, oracle::bessel_k_0p7_1p9,
         oracle::bessel_k_0p7_2p1, oracle::bessel_k_0p7_5, oracle::bessel_k_0p7_30},
        {oracle::bessel_k_0p75_0p0001, oracle::bessel_k_0p75_0p1, oracle::bessel_k_0p75_1, oracle::bessel_k_0p75_1p9,
         oracle::bessel_k_0p75_2p1, oracle::bessel_k_0p75_5, oracle::bessel_k_0p75_30},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 7; ++j)
            EXPECT_LT(rel(bessel_k(nus[i], zs[j]), ref[i][j]), 1e-10) << "nu=" << nus[i] << " z=" << zs[j];
}

TEST(BesselK, SmallArgumentLaw) {
    const double z = 1e-4;
    const double law = fracext::gamma(0.3) * std::pow(2.0, -0.7) * std::pow(z, -0.3);
    EXPECT_LT(rel(bessel_k(0.3, z), law), 0.01);
}

TEST(BesselK, LargeArgumentLaw) {
    const double law = std::sqrt(kPi / 60.0) * std::exp(-30.0);
    EXPECT_LT(rel(bessel_k(0.7, 30.0), law), 0.05);
}

TEST(BesselK, BranchesAgreeAcrossTheSwitch) {
    for (double nu : {0.1, 0.33, 0.5, 0.9}) {
        const double below = bessel_k(nu, 2.0 - 1e-9), above = bessel_k(nu, 2.0 + 1e-9);
        EXPECT_LT(rel(below, above), 1e-8) << nu;
    }
}

TEST(BesselK, PositiveAndLogConvex) {
    for (double nu : {0.05, 0.3, 0.5, 0.8, 0.95}) {
        const double h = 0.05;
        for (double z = 0.1; z < 40.0; z += 0.37) {
            const double a = bessel_k(nu, z - h * z), b = bessel_k(nu, z), c = bessel_k(nu, z + h * z);
            ASSERT_GT(b, 0.0);
            // log-convexity on the three-point stencil (symmetric in relative step)
            const double la = std::log(a), lb = std::log(b), lc = std::log(c);
            const double za = z - h * z, zc = z + h * z;
            EXPECT_LE(lb, la + (lc - la) * (z - za) / (zc - za) + 1e-12) << "nu=" << nu << " z=" << z;
        }
    }
}

TEST(BesselK, NonPositiveArgumentIsDomainError) {
    EXPECT_THROW(bessel_k(0.5, 0.0), DomainError);
    EXPECT_THROW(bessel_k(0.5, -1.0), DomainError);
}

TEST(BesselI, TabulatedValues) {
    EXPECT_DOUBLE_EQ(bessel_i(0.0, 0.0), 1.0);
    EXPECT_NEAR(bessel_i(0.5, 1.0), std::sqrt(2.0 / kPi) * std::sinh(1.0), 1e-14);
    EXPECT_NEAR(bessel_i(0.5, 1.0), 0.9376748, 1e-7);
    const double nus[] = {-0.75, -0.4, 0.0, 0.25, 0.5, 0.6};
    const double zs[] = {1e-3, 0.5, 1.0, 8.0, 40.0};
    const double ref[6][5] = {
        {oracle::bessel_i_m0p75_0p001, oracle::bessel_i_m0p75_0p5, oracle::bessel_i_m0p75_1, oracle::bessel_i_m0p75_8,
         oracle::bessel_i_m0p75_40},
        {oracle::bessel_i_m0p4_0p001, oracle::bessel_i_m0p4_0p5, oracle::bessel_i_m0p4_1, oracle::bessel_i_m0p4_8,
         oracle::bessel_i_m0p4_40},
        {oracle::bessel_i_0_0p001, oracle::bessel_i_0_0p5, oracle::bessel_i_0_1, oracle::bessel_i_0_8,
         oracle::bessel_i_0_40},
        {oracle::bessel_i_0p25_0p001, oracle::bessel_i_0p25_0p5, oracle::bessel_i_0p25_1, oracle::bessel_i_0p25_8,
         oracle::bessel_i_0p25_40},
        {oracle::bessel_i_0p5_0p001, oracle::bessel_i_0p5_0p5, oracle::bessel_i_0p5_1, oracle::bessel_i_0p5_8,
         oracle::bessel_i_0p5_40},
        {oracle::bessel_i_0p6_0p001, oracle::bessel_i_0p6_0p5, oracle::bessel_i_0p6_1, oracle::bessel_i_0p6_8,
         oracle::bessel_i_0p6_40},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 5; ++j)
            EXPECT_LT(rel(bessel_i(nus[i], zs[j]), ref[i][j]), 1e-10) << "nu=" << nus[i] << " z=" << zs[j];
}

TEST(BesselI, NegativeOrderSmallArgumentLaw) {
    for (double z : {1e-3, 1e-5, 1e-7}) {
        const double law = std::pow(0.5 * z, -0.4) / fracext::gamma(0.6);
        EXPECT_LT(rel(bessel_i(-0.4, z), law), 2.0 * z) << z;
    }
}

TEST(BesselI, NegativeOrderAtZeroIsDomainError) { EXPECT_THROW(bessel_i(-0.4, 0.0), DomainError); }

TEST(Hermite, TabulatedValues) {
    EXPECT_NEAR(hermite_function(MultiIndex{0}, Point{0.0}), oracle::h0_at_0, 1e-15);
    EXPECT_NEAR(hermite_function(MultiIndex{0}, Point{0.0}), 0.7511255, 1e-7);
    EXPECT_EQ(hermite_function(MultiIndex{1}, Point{0.0}), 0.0);
    const int ks[] = {0, 1, 2, 5, 10, 30};
    const double xs[] = {0.3, 1.7, -4.0};
    const double ref[6][3] = {
        {oracle::hermite_0_0p3, oracle::hermite_0_1p7, oracle::hermite_0_m4},
        {oracle::hermite_1_0p3, oracle::hermite_1_1p7, oracle::hermite_1_m4},
        {oracle::hermite_2_0p3, oracle::hermite_2_1p7, oracle::hermite_2_m4},
        {oracle::hermite_5_0p3, oracle::hermite_5_1p7, oracle::hermite_5_m4},
        {oracle::hermite_10_0p3, oracle::hermite_10_1p7, oracle::hermite_10_m4},
        {oracle::hermite_30_0p3, oracle::hermite_30_1p7, oracle::hermite_30_m4},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_NEAR(hermite_function_1d(ks[i], xs[j]), ref[i][j], 1e-13) << "k=" << ks[i] << " x=" << xs[j];
}

TEST(Hermite, TensorProduct) {
    const Point x{0.3, -4.0};
    EXPECT_NEAR(hermite_function(MultiIndex{2, 5}, x), oracle::hermite_2_0p3 * oracle::hermite_5_m4, 1e-15);
}

TEST(Hermite, Orthonormality) {
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k <= 8; ++k) {
            const double v = trapezoid(-12, 12, 4800, [&](double x) {
                return hermite_function_1d(j, x) * hermite_function_1d(k, x);
            });
            EXPECT_NEAR(v, j == k ? 1.0 : 0.0, 1e-8) << j << "," << k;
        }
}

TEST(Hermite, EigenfunctionOfOscillator) {
    const double h = 1e-3;
    for (double x : {-1.3, 0.0, 0.4, 2.2}) {
        const double f = hermite_function_1d(4, x);
        const double fxx = (hermite_function_1d(4, x + h) - 2 * f + hermite_function_1d(4, x - h)) / (h * h);
        EXPECT_NEAR(-fxx + x * x * f, 9.0 * f, 1e-5) << x;
    }
}

TEST(Ladder, Examples) {
    HermiteExpansion e(1, 10);
    e.set(MultiIndex{0}, 1.0);
    const auto up = ladder_apply(-1, e);
    ASSERT_EQ(up.coeffs.size(), 1u);
    EXPECT_DOUBLE_EQ(up.get(MultiIndex{1}), std::sqrt(2.0));
    EXPECT_TRUE(ladder_apply(1, e).coeffs.empty());

    HermiteExpansion one(1, 10);
    one.set(MultiIndex{1}, 1.0);
    const auto down = ladder_apply(1, one);
    ASSERT_EQ(down.coeffs.size(), 1u);
    EXPECT_DOUBLE_EQ(down.get(MultiIndex{0}), std::sqrt(2.0));
}

TEST(Ladder, RaiseThenLowerMultipliesByTwoAlphaPlusTwo) {
    HermiteExpansion e(2, 12);
    e.set(MultiIndex{3, 1}, 0.7);
    for (int axis = 1; axis <= 2; ++axis) {
        const auto back = ladder_apply(axis, ladder_apply(-axis, e));
        const int a = axis == 1 ? 3 : 1;
        EXPECT_NEAR(back.get(MultiIndex{3, 1}), 0.7 * (2 * a + 2), 1e-14);
    }
}

TEST(Ladder, RaisingPastCapFlagsTruncation) {
    HermiteExpansion e(1, 3);
    e.set(MultiIndex{3}, 1.0);
    const auto r = ladder_apply(-1, e);
    EXPECT_TRUE(r.truncated);
    EXPECT_TRUE(r.coeffs.empty());
}

TEST(Ladder, HalfSumIsMultiplicationByX) {
    HermiteExpansion e(1, 20);
    e.set(MultiIndex{4}, 1.0);
    const auto lo = ladder_apply(1, e), hi = ladder_apply(-1, e);
    for (double x : {-2.0, -0.5, 0.0, 0.8, 1.9}) {
        const double half_sum = 0.5 * (lo(Point{x}) + hi(Point{x}));
        EXPECT_NEAR(half_sum, x * hermite_function_1d(4, x), 1e-13) << x;
    }
}

TEST(Ladder, MatchesDerivativeRealization) {
    const double h = 1e-4;
    HermiteExpansion e(1, 20);
    e.set(MultiIndex{3}, 1.0);
    const auto lo = ladder_apply(1, e), hi = ladder_apply(-1, e);
    for (double x : {-1.1, 0.3, 2.0}) {
        const double d = (hermite_function_1d(3, x + h) - hermite_function_1d(3, x - h)) / (2 * h);
        const double f = hermite_function_1d(3, x);
        EXPECT_NEAR(lo(Point{x}), d + x * f, 1e-7);
        EXPECT_NEAR(hi(Point{x}), -d + x * f, 1e-7);
    }
}
