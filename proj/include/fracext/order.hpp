#pragma once

#include <cmath>

#include "errors.hpp"
#include "point.hpp"
#include "specfun.hpp"

namespace fracext {

/** @brief Fractional exponent sigma in (0,1) with its cached Gamma constants. */
class FracOrder {
public:
    explicit FracOrder(double sigma) : sigma_(sigma) {
        if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("sigma must be in (0,1)");
        gamma_minus_sigma_ = gamma(-sigma);
        gamma_sigma_ = gamma(sigma);
        norm_const_ = std::pow(4.0, sigma) * gamma_sigma_;
        for (int n = 1; n <= kMaxDim; ++n) {
            lap_const_[n - 1] = -std::pow(4.0, sigma) * gamma(0.5 * n + sigma) /
                                (std::pow(kPi, 0.5 * n) * gamma_minus_sigma_);
        }
    }

    double sigma() const { return sigma_; }
    /// Gamma(-sigma) = Gamma(1-sigma)/(-sigma), always negative.
    double gamma_minus_sigma() const { return gamma_minus_sigma_; }
    double gamma_sigma() const { return gamma_sigma_; }
    /// 4^sigma Gamma(sigma), the extension-problem normalization.
    double norm_const() const { return norm_const_; }
    /// c_{n,sigma} of the pointwise singular-integral formula.
    double lap_const(int n) const {
        Point::check_dim(n);
        return lap_const_[n - 1];
    }
    /// Gamma(-sigma) / (4^sigma Gamma(sigma)), the Neumann-trace factor.
    double trace_const() const { return gamma_minus_sigma_ / norm_const_; }

private:
    double sigma_;
    double gamma_minus_sigma_;
    double gamma_sigma_;
    double norm_const_;
    double lap_const_[kMaxDim];
};

/** @brief A node of the reparametrization t = atanh(s) with the density of dt/t^{1+sigma} in s. */
struct MedaPoint {
    double s;
    double t;
    double mu_density;
    double one_minus_s;
    double log_density;
};

/// t(s) = (1/2) log((1+s)/(1-s)) from s and an accurate 1-s.
inline double meda_t(double s, double one_minus_s) {
    if (s < 0.5) return std::atanh(s);
    return 0.5 * (std::log1p(s) - std::log(one_minus_s));
}

inline MedaPoint meda_map(double s, double one_minus_s, const FracOrder& order) {
    if (!(s > 0.0 && one_minus_s > 0.0 && s < 1.0)) throw DomainError("meda_map: s must be in (0,1)");
    const double t = meda_t(s, one_minus_s);
    const double log_density = -(std::log(one_minus_s) + std::log1p(s) + (1.0 + order.sigma()) * std::log(t));
    return {s, t, std::exp(log_density), one_minus_s, log_density};
}

inline MedaPoint meda_map(double s, const FracOrder& order) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("meda_map: s must be in (0,1)");
    return meda_map(s, 1.0 - s, order);
}

} // namespace fracext
