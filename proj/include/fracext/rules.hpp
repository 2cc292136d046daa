#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "point.hpp"

namespace fracext {

/** @brief Tolerances and refinement limits shared by the integration engines. */
struct QuadratureSpec {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_levels = 8;
    double split_point = 0.5;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
        if (max_levels < 4) throw DomainError("QuadratureSpec: max_levels must be at least 4");
        if (!(split_point > 0.0 && split_point < 1.0)) throw DomainError("QuadratureSpec: split_point must be in (0,1)");
    }
    QuadratureSpec scaled(double factor) const {
        QuadratureSpec s = *this;
        s.abs_tol *= factor;
        s.rel_tol *= factor;
        return s;
    }
};

template <typename V>
struct QuadResult {
    V value{};
    double error = 0.0;
    int levels = 0;
    bool converged = true;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        levels = std::max(levels, o.levels);
        converged = converged && o.converged;
        return *this;
    }
};

// Small algebra so the engines work for scalars and fixed-size vectors alike.
inline double qnorm(double v) { return std::fabs(v); }
template <size_t K>
double qnorm(const std::array<double, K>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}
inline bool qfinite(double v) { return std::isfinite(v); }
template <size_t K>
bool qfinite(const std::array<double, K>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}
template <size_t K>
std::array<double, K>& operator+=(std::array<double, K>& a, const std::array<double, K>& b) {
    for (size_t i = 0; i < K; ++i) a[i] += b[i];
    return a;
}
template <size_t K>
std::array<double, K> operator-(std::array<double, K> a, const std::array<double, K>& b) {
    for (size_t i = 0; i < K; ++i) a[i] -= b[i];
    return a;
}
template <size_t K>
std::array<double, K> operator*(double s, std::array<double, K> a) {
    for (double& x : a) x *= s;
    return a;
}

namespace detail {

struct TanhSinhNode {
    double t;
    double frac;    // distance to the nearer endpoint as a fraction of b-a
    double weight;  // dx/dt as a fraction of b-a
    bool right;
};

constexpr double kTanhSinhTMax = 6.0;
constexpr int kTanhSinhLevels = 12;

inline const std::vector<std::vector<TanhSinhNode>>& tanh_sinh_tables() {
    static const std::vector<std::vector<TanhSinhNode>> tables = [] {
        std::vector<std::vector<TanhSinhNode>> lv(kTanhSinhLevels + 1);
        auto make = [](double t) {
            const double u = 0.5 * kPi * std::sinh(t);
            const double e = std::exp(-2.0 * std::fabs(u));
            const double cu = std::cosh(u);
            TanhSinhNode nd{t, e / (1.0 + e), 0.25 * kPi * std::cosh(t) / (cu * cu), t > 0};
            return nd;
        };
        for (int k = -static_cast<int>(kTanhSinhTMax); k <= static_cast<int>(kTanhSinhTMax); ++k)
            lv[0].push_back(make(k));
        for (int L = 1; L <= kTanhSinhLevels; ++L) {
            const double h = std::ldexp(1.0, -L);
            const int kmax = static_cast<int>(kTanhSinhTMax / h);
            for (int k = -kmax + 1; k < kmax; k += 2) lv[L].push_back(make(k * h));
        }
        return lv;
    }();
    return tables;
}

} // namespace detail

/**
 * @brief Double-exponential rule on [a,b] for integrands with endpoint singularities.
 *
 * The integrand is called as f(x, x - a, b - x) with both distances computed without
 * cancellation, so that integrands can resolve behaviour next to either endpoint.
 */
template <typename V, typename F>
QuadResult<V> tanh_sinh(F&& f, double a, double b, double abs_tol, double rel_tol, int max_levels) {
    QuadResult<V> res;
    if (!(b > a)) {
        if (a == b) return res;
        throw DomainError("tanh_sinh: empty or reversed interval");
    }
    const auto& tables = detail::tanh_sinh_tables();
    max_levels = std::min(max_levels, detail::kTanhSinhLevels);
    const double width = b - a;

    V sum{};
    double wmax = 0.0;
    double t_lo = -detail::kTanhSinhTMax - 1, t_hi = detail::kTanhSinhTMax + 1;
    std::vector<std::pair<double, double>> magnitudes;  // (t, |w f|) for pruning

    auto visit = [&](const detail::TanhSinhNode& nd, bool record) {
        if (nd.t < t_lo || nd.t > t_hi) return;
        const double d = width * nd.frac;
        const double w = width * nd.weight;
        if (!(d > 0.0) || !(w > 0.0)) return;
        V val;
        if (nd.right) val = f(b - d, width - d, d);
        else val = f(a + d, d, width - d);
        const V contrib = w * val;
        if (!qfinite(contrib)) throw DomainError("tanh_sinh: non-finite integrand value");
        sum += contrib;
        if (record) {
            const double m = qnorm(contrib);
            magnitudes.emplace_back(nd.t, m);
            wmax = std::max(wmax, m);
        }
    };

    double h = 1.0;
    V prev{};
    for (int L = 0; L <= max_levels; ++L) {
        if (L > 0) h *= 0.5;
        for (const auto& nd : tables[L]) visit(nd, L <= 1);
        if (L == 1) {
            // drop far nodes whose contributions are negligible on both sides
            double lo = 0.0, hi = 0.0;
            for (auto [t, m] : magnitudes) {
                if (m > 1e-18 * wmax) {
                    lo = std::min(lo, t);
                    hi = std::max(hi, t);
                }
            }
            t_lo = lo - 1.0;
            t_hi = hi + 1.0;
        }
        const V cur = h * sum;
        if (L >= 2) {
            const double err = qnorm(cur - prev);
            res.value = cur;
            res.error = err;
            res.levels = L;
            if (err <= std::max(abs_tol, rel_tol * qnorm(cur))) {
                res.converged = true;
                return res;
            }
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

namespace detail {

template <int N>
struct GaussLegendreTable {
    std::array<double, N> x{};
    std::array<double, N> w{};
    GaussLegendreTable() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
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
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < N; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            dp = N * (z * p0 - p1) / (z * z - 1.0);
            x[i] = -z;
            x[N - 1 - i] = z;
            w[i] = w[N - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }
};

template <int N>
const GaussLegendreTable<N>& gauss_legendre_table() {
    static const GaussLegendreTable<N> t;
    return t;
}

template <typename V, int N, typename F>
V gauss_legendre_fixed(F& f, double a, double b) {
    const auto& tb = gauss_legendre_table<N>();
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    V s{};
    for (int i = 0; i < N; ++i) s += (r * tb.w[i]) * f(c + r * tb.x[i]);
    return s;
}

template <typename V, typename F>
void gl_adaptive_rec(F& f, double a, double b, const V& whole, double tol, int depth, QuadResult<V>& out) {
    const double m = 0.5 * (a + b);
    const V left = gauss_legendre_fixed<V, 16>(f, a, m);
    const V right = gauss_legendre_fixed<V, 16>(f, m, b);
    V both = left;
    both += right;
    const double err = qnorm(both - whole);
    if (err <= tol || depth <= 0) {
        out.value += both;
        out.error += err;
        if (err > tol) out.converged = false;
        return;
    }
    gl_adaptive_rec(f, a, m, left, 0.5 * tol, depth - 1, out);
    gl_adaptive_rec(f, m, b, right, 0.5 * tol, depth - 1, out);
}

} // namespace detail

/** @brief Adaptive 16-point Gauss-Legendre by interval bisection for smooth integrands. */
template <typename V, typename F>
QuadResult<V> gauss_legendre_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol, int max_depth = 14) {
    QuadResult<V> out;
    if (a == b) return out;
    const V whole = detail::gauss_legendre_fixed<V, 16>(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * qnorm(whole));
    detail::gl_adaptive_rec(f, a, b, whole, tol, max_depth, out);
    return out;
}

/** @brief Integral over [a, inf): double-exponential on [a, split] plus t = split/v on the tail. */
template <typename V, typename F>
QuadResult<V> integrate_halfline(F&& f, double a, double split, double abs_tol, double rel_tol, int max_levels) {
    if (!(split > a) || !(split > 0.0)) throw DomainError("integrate_halfline: split must exceed the lower limit");
    QuadResult<V> res = tanh_sinh<V>([&](double t, double, double) { return f(t); }, a, split,
                                     abs_tol, rel_tol, max_levels);
    res += tanh_sinh<V>(
        [&](double v, double, double) {
            // beyond t ~ 1e150 the integrand is treated as vanished
            if (v < 1e-150) return V{};
            const double t = split / v;
            return (split / (v * v)) * f(t);
        },
        0.0, 1.0, abs_tol, rel_tol, max_levels);
    return res;
}

} // namespace fracext
