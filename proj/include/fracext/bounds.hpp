#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"
#include "kernels.hpp"
#include "order.hpp"
#include "point.hpp"

namespace fracext {

/**
 * @brief Fitted constants for the kernel estimates in one dimension.
 *
 * heat:     G_{t(s)}(x,z) <= C ((1-s)/s)^{1/2} e^{-|x||x-z|/C} e^{-|x-z|^2/(C s)}
 * f_kernel: F_sigma(x,z) <= C |x-z|^{-1-2sigma} e^{-|x||x-z|/C} e^{-|x-z|^2/C}
 * b_growth: B_sigma(x)   <= C (1 + |x|^{2sigma})
 */
struct BoundConstants {
    double sigma;
    double heat;
    double f_kernel;
    double b_growth;
};

// Produced by tools/calibrate_bounds on the calibration grids below (fit times 1.1).
inline constexpr std::array<BoundConstants, 3> kFrozenBounds{{
    {0.25, 4.87, 4.678, 0.9614},
    {0.50, 4.87, 5.095, 1.078},
    {0.75, 4.87, 5.287, 1.097},
}};

inline const BoundConstants& frozen_bounds(double sigma) {
    for (const auto& b : kFrozenBounds)
        if (std::fabs(b.sigma - sigma) < 1e-12) return b;
    throw DomainError("no frozen bound constants for this sigma (tabulated: 0.25, 0.5, 0.75)");
}

/** @brief One sample of a bound: log of the left side and the right side as a function of log C. */
struct BoundSample {
    double log_lhs;
    std::function<double(double)> log_rhs;  // argument: C
};

namespace detail {

// m staggered nodes on [a,b]; the offset keeps x and z grids disjoint at every resolution.
inline std::vector<double> staggered(double a, double b, int m, double offset) {
    std::vector<double> v(m);
    for (int i = 0; i < m; ++i) v[i] = a + (b - a) * (i + offset) / m;
    return v;
}

inline double log_mehler_s(double s, double oms, double x, double z) {
    return 0.5 * mehler_log_prefactor(s, oms) - 0.25 * (s * (x + z) * (x + z) + (x - z) * (x - z) / s);
}

} // namespace detail

/// Heat-kernel bound samples: x, z on [-3,3] (m each), s log-spaced on (1e-3, 1) (m values).
inline std::vector<BoundSample> heat_bound_samples(int m) {
    std::vector<BoundSample> out;
    const auto xs = detail::staggered(-3, 3, m, 0.5), zs = detail::staggered(-3, 3, m, 0.25);
    for (int k = 0; k < m; ++k) {
        const double u = -3.0 + 3.0 * (k + 0.5) / m;
        const double s = std::pow(10.0, u);
        const double oms = -std::expm1(u * std::log(10.0));
        for (double x : xs)
            for (double z : zs) {
                const double d = std::fabs(x - z);
                const double ax = std::fabs(x);
                out.push_back({detail::log_mehler_s(s, oms, x, z), [=](double C) {
                                   return std::log(C) + 0.5 * std::log(oms / s) - ax * d / C - d * d / (C * s);
                               }});
            }
    }
    return out;
}

/// F_sigma bound samples: x, z on [-3,3], m each.
inline std::vector<BoundSample> f_bound_samples(int m, const FracOrder& order) {
    std::vector<BoundSample> out;
    const double s2 = 2.0 * order.sigma();
    const auto xs = detail::staggered(-3, 3, m, 0.5), zs = detail::staggered(-3, 3, m, 0.25);
    for (double x : xs)
        for (double z : zs) {
            const double d = std::fabs(x - z);
            const double ax = std::fabs(x);
            const double F = f_sigma_kernel(Point{x}, Point{z}, order);
            out.push_back({std::log(F), [=](double C) {
                               return std::log(C) - (1.0 + s2) * std::log(d) - ax * d / C - d * d / C;
                           }});
        }
    return out;
}

/// B_sigma growth samples: x on [-50,50], m values.
inline std::vector<BoundSample> b_bound_samples(int m, const FracOrder& order) {
    std::vector<BoundSample> out;
    const double s2 = 2.0 * order.sigma();
    for (double x : detail::staggered(-50, 50, m, 0.5)) {
        const double B = b_sigma(Point{x}, order, 1);
        const double g = std::log1p(std::pow(std::fabs(x), s2));
        out.push_back({std::log(B), [=](double C) { return std::log(C) + g; }});
    }
    return out;
}

/** @brief Smallest C in [1e-3, 1e8] with every sample satisfied, by bisection in log C. */
inline double fit_bound_constant(const std::vector<BoundSample>& samples) {
    auto ok = [&](double C) {
        for (const auto& s : samples)
            if (s.log_lhs > s.log_rhs(C)) return false;
        return true;
    };
    double lo = std::log(1e-3), hi = std::log(1e8);
    if (!ok(std::exp(hi))) throw AccuracyError("no bound constant below 1e8 fits the samples", 1e8, 0.0);
    if (ok(std::exp(lo))) return std::exp(lo);
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ok(std::exp(mid)) ? hi : lo) = mid;
    }
    return std::exp(hi);
}

inline int count_bound_violations(const std::vector<BoundSample>& samples, double C) {
    int v = 0;
    for (const auto& s : samples)
        if (s.log_lhs > s.log_rhs(C)) ++v;
    return v;
}

/// Calibration resolutions; verification uses four times as many nodes per axis.
inline constexpr int kHeatCalibration = 12;
inline constexpr int kFCalibration = 24;
inline constexpr int kBCalibration = 26;

} // namespace fracext
