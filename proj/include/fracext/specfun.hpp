#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <limits>
#include <map>
#include <vector>

#include "errors.hpp"
#include "point.hpp"

namespace fracext {

// ---------------------------------------------------------------------------
// Gamma

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

/** @brief Gamma function; on (-1,0) evaluated as Gamma(1+x)/x. */
inline double gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
    if (is_nonpositive_integer(x)) throw DomainError("gamma: pole at non-positive integer");
    if (x > -1.0 && x < 0.0) return std::tgamma(1.0 + x) / x;
    return std::tgamma(x);
}

// ---------------------------------------------------------------------------
// Modified Bessel functions

namespace detail {

inline double bessel_i_series(double nu, double z) {
    const double q = 0.25 * z * z;
    double term = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + nu));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

inline double bessel_i_asymptotic(double nu, double z) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (k * 8.0 * z);
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    }
    return std::exp(z) / std::sqrt(2.0 * kPi * z) * sum;
}

// Steed's continued fraction for K_mu and K_{mu+1}, |mu| <= 1/2, z >= 2.
inline std::array<double, 2> bessel_k_cf(double mu, double z) {
    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 10000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < 1e-17) break;
    }
    h *= a1;
    const double kmu = std::sqrt(kPi / (2.0 * z)) * std::exp(-z) / s;
    const double k1 = kmu * (mu + z + 0.5 - h) / z;
    return {kmu, k1};
}

// Reflection formula, valid for non-integer nu.
inline double bessel_k_reflection(double nu, double z) {
    return kPi * (bessel_i_series(-nu, z) - bessel_i_series(nu, z)) / (2.0 * std::sin(nu * kPi));
}

} // namespace detail

/// Branch point between the reflection formula and the continued fraction for K.
constexpr double kBesselKBranch = 2.0;

/** @brief Modified Bessel function of the first kind I_nu(z), z >= 0. */
inline double bessel_i(double nu, double z) {
    if (!(z >= 0.0) || !std::isfinite(nu)) throw DomainError("bessel_i: requires z >= 0");
    if (nu < 0.0 && nu == std::floor(nu)) nu = -nu;  // I_{-m} = I_m
    if (z == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw DomainError("bessel_i: negative order is singular at z = 0");
    }
    if (z > 30.0) return detail::bessel_i_asymptotic(nu, z);
    return detail::bessel_i_series(nu, z);
}

/** @brief Modified Bessel function of the third kind K_nu(z), z > 0. */
inline double bessel_k(double nu, double z) {
    if (!(z > 0.0) || !std::isfinite(nu)) throw DomainError("bessel_k: requires z > 0");
    nu = std::fabs(nu);
    if (z <= kBesselKBranch) {
        const double frac = nu - std::round(nu);
        constexpr double eta = 1e-5;
        if (std::fabs(frac) < eta) {
            // integer order: symmetric average of nearby non-integer orders
            return 0.5 * (detail::bessel_k_reflection(nu - eta, z) +
                          detail::bessel_k_reflection(nu + eta, z));
        }
        return detail::bessel_k_reflection(nu, z);
    }
    const int shift = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - shift;
    auto [km, kp] = detail::bessel_k_cf(mu, z);
    if (shift == 0) return km;
    for (int k = 1; k < shift; ++k) {
        // K_{mu+k+1} = K_{mu+k-1} + 2(mu+k)/z K_{mu+k}
        const double next = km + 2.0 * (mu + k) / z * kp;
        km = kp;
        kp = next;
    }
    return kp;
}

// ---------------------------------------------------------------------------
// Hermite functions

/** @brief Fills out[k] = h_k(x) for k = 0..kmax with the normalized three-term recurrence. */
template <typename Real>
void hermite_functions_1d(int kmax, Real x, Real* out) {
    out[0] = std::pow(Real(kPi), Real(-0.25)) * std::exp(-x * x / 2);
    if (kmax == 0) return;
    out[1] = std::sqrt(Real(2)) * x * out[0];
    for (int k = 1; k < kmax; ++k) {
        out[k + 1] = x * std::sqrt(Real(2) / (k + 1)) * out[k] -
                     std::sqrt(Real(k) / (k + 1)) * out[k - 1];
    }
}

template <typename Real>
Real hermite_function_1d(int k, Real x) {
    if (k < 0) throw DomainError("hermite index must be non-negative");
    std::vector<Real> h(k + 1);
    hermite_functions_1d(k, x, h.data());
    return h[k];
}

/** @brief Multi-index alpha in N_0^n. */
struct MultiIndex {
    std::array<int, kMaxDim> a{};
    int dim = 1;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> v) : dim(static_cast<int>(v.size())) {
        Point::check_dim(dim);
        int i = 0;
        for (int k : v) {
            if (k < 0) throw DomainError("multi-index entries must be non-negative");
            a[i++] = k;
        }
    }
    static MultiIndex zero(int n) {
        Point::check_dim(n);
        MultiIndex m;
        m.dim = n;
        return m;
    }

    int order() const {
        int s = 0;
        for (int i = 0; i < dim; ++i) s += a[i];
        return s;
    }
    /// Eigenvalue 2|alpha| + n of the harmonic oscillator.
    double eigenvalue() const { return 2.0 * order() + dim; }

    int operator[](int i) const { return a[i]; }
    int& operator[](int i) { return a[i]; }

    auto operator<=>(const MultiIndex&) const = default;
};

inline double hermite_function(const MultiIndex& alpha, const Point& x) {
    if (alpha.dim != x.dim) throw DomainError("hermite_function: dimension mismatch");
    double v = 1.0;
    for (int i = 0; i < alpha.dim; ++i) v *= hermite_function_1d(alpha[i], x[i]);
    return v;
}

/** @brief Finite Hermite series sum over alpha of c_alpha h_alpha. */
struct HermiteExpansion {
    int dim = 1;
    int degree_cap = 40;
    std::map<MultiIndex, double> coeffs;
    double tail_bound = std::numeric_limits<double>::quiet_NaN();
    bool truncated = false;

    HermiteExpansion() = default;
    HermiteExpansion(int n, int cap) : dim(n), degree_cap(cap) { Point::check_dim(n); }

    void set(const MultiIndex& alpha, double c) {
        if (alpha.dim != dim) throw DomainError("HermiteExpansion: dimension mismatch");
        if (alpha.order() > degree_cap) throw DomainError("HermiteExpansion: degree above cap");
        coeffs[alpha] = c;
    }
    double get(const MultiIndex& alpha) const {
        auto it = coeffs.find(alpha);
        return it == coeffs.end() ? 0.0 : it->second;
    }
    int max_order() const {
        int m = 0;
        for (const auto& [alpha, c] : coeffs) m = std::max(m, alpha.order());
        return m;
    }

    double operator()(const Point& x) const {
        if (coeffs.empty()) return 0.0;
        if (x.dim != dim) throw DomainError("HermiteExpansion: dimension mismatch");
        const int kmax = max_order();
        std::vector<double> table(static_cast<size_t>(dim) * (kmax + 1));
        for (int i = 0; i < dim; ++i) hermite_functions_1d(kmax, x[i], table.data() + i * (kmax + 1));
        double s = 0.0;
        for (const auto& [alpha, c] : coeffs) {
            double h = 1.0;
            for (int i = 0; i < dim; ++i) h *= table[i * (kmax + 1) + alpha[i]];
            s += c * h;
        }
        return s;
    }
};

/**
 * @brief Applies A_i = d_i + x_i (direction = +i) or A_{-i} = -d_i + x_i (direction = -i).
 *
 * Terms raised past the degree cap are dropped and the result is flagged truncated.
 */
inline HermiteExpansion ladder_apply(int direction, const HermiteExpansion& e) {
    const int axis = std::abs(direction) - 1;
    if (direction == 0 || axis >= e.dim) throw DomainError("ladder_apply: axis out of range");
    HermiteExpansion out(e.dim, e.degree_cap);
    out.truncated = e.truncated;
    for (const auto& [alpha, c] : e.coeffs) {
        MultiIndex beta = alpha;
        double factor;
        if (direction > 0) {
            if (alpha[axis] == 0) continue;
            factor = std::sqrt(2.0 * alpha[axis]);
            beta[axis] -= 1;
        } else {
            factor = std::sqrt(2.0 * alpha[axis] + 2.0);
            beta[axis] += 1;
            if (beta.order() > e.degree_cap) {
                out.truncated = true;
                continue;
            }
        }
        out.coeffs[beta] += factor * c;
    }
    return out;
}

} // namespace fracext
