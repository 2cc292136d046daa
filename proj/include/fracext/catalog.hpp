#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "point.hpp"
#include "specfun.hpp"

namespace fracext {

/** @brief A named catalog entry with its parameters and the field it realizes. */
struct CatalogFunction {
    std::string name;
    std::vector<double> params;
    ScalarField field;
};

inline ScalarField gaussian_field(int n) {
    Point::check_dim(n);
    ScalarField f;
    f.dim = n;
    f.eval = [](const Point& z) { return std::exp(-0.5 * z.norm2()); };
    f.decay = DecayInfo::schwartz(1.0, 0.5, 0.0);
    f.tag = AnalyticTag::Gaussian;
    f.length_scale = 1.0;
    f.name = "gaussian";
    return f;
}

/// Tensor Hermite function h_alpha; beyond the turning point sqrt(2|alpha|+n) it sits under e^{-(r-r0)^2/2}.
inline ScalarField hermite_field(const MultiIndex& alpha) {
    ScalarField f;
    f.dim = alpha.dim;
    f.eval = [alpha](const Point& z) { return hermite_function(alpha, z); };
    f.decay = DecayInfo::schwartz(1.0, 0.5, std::sqrt(alpha.eigenvalue()));
    f.tag = AnalyticTag::Hermite;
    f.hermite_index = alpha;
    f.length_scale = 1.0 / std::sqrt(alpha.eigenvalue());
    std::ostringstream os;
    os << "hermite:";
    for (int i = 0; i < alpha.dim; ++i) os << (i ? "," : "") << alpha[i];
    f.name = os.str();
    return f;
}

/// exp(1 - 1/(1-|z|^2)) inside the unit ball, zero outside; C-infinity with compact support.
inline ScalarField bump_field(int n) {
    Point::check_dim(n);
    ScalarField f;
    f.dim = n;
    f.eval = [](const Point& z) {
        const double r2 = z.norm2();
        return r2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r2)) : 0.0;
    };
    f.decay = DecayInfo::compact(1.0, 1.0);
    f.length_scale = 0.25;
    f.name = "bump";
    return f;
}

/// (1+|z|^2)^{-N/2}, declared in L^1_N' with N' = (n+1)/2 so that every N >= 0 qualifies.
inline ScalarField poly_decay_field(int n, double N) {
    Point::check_dim(n);
    if (!(N >= 0.0)) throw UsageError("poly-decay exponent must be non-negative");
    ScalarField f;
    f.dim = n;
    f.eval = [N](const Point& z) { return std::pow(1.0 + z.norm2(), -0.5 * N); };
    f.decay = DecayInfo::polynomial(1.0, N, 1.0, 0.5 * (n + 1));
    f.length_scale = 1.0;
    f.name = "poly-decay:" + std::to_string(static_cast<int>(N));
    lpn_norm(f, f.decay.p, f.decay.N);
    return f;
}

inline ScalarField constant_field(int n, double value = 1.0) {
    ScalarField f = poly_decay_field(n, 0.0);
    f.eval = [value](const Point&) { return value; };
    f.decay.amplitude = std::fabs(value);
    f.tag = AnalyticTag::Constant;
    f.name = "constant";
    return f;
}

namespace detail {

inline std::vector<double> parse_numbers(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw UsageError("bad number '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad number '" + item + "'");
        }
    }
    return out;
}

} // namespace detail

/**
 * @brief Parses "gaussian", "hermite:k[,k2,k3]", "bump", "poly-decay:N" or "constant".
 *
 * For hermite the number of indices fixes the dimension when n is 0; otherwise it must match n.
 */
inline CatalogFunction make_catalog_function(const std::string& spec, int n) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    CatalogFunction c;
    c.name = name;
    if (!args.empty()) c.params = detail::parse_numbers(args);
    auto need = [&](size_t lo, size_t hi) {
        if (c.params.size() < lo || c.params.size() > hi) throw UsageError("wrong parameter count for '" + name + "'");
    };
    const int dim = n > 0 ? n : 1;
    if (name == "gaussian") {
        need(0, 0);
        c.field = gaussian_field(dim);
    } else if (name == "bump") {
        need(0, 0);
        c.field = bump_field(dim);
    } else if (name == "constant") {
        need(0, 1);
        c.field = constant_field(dim, c.params.empty() ? 1.0 : c.params[0]);
    } else if (name == "poly-decay") {
        need(1, 1);
        c.field = poly_decay_field(dim, c.params[0]);
    } else if (name == "hermite") {
        need(1, 3);
        const int k = static_cast<int>(c.params.size());
        if (n > 0 && k != 1 && k != n) throw UsageError("hermite index length does not match --dim");
        MultiIndex alpha = MultiIndex::zero(n > 0 ? n : k);
        for (int i = 0; i < alpha.dim; ++i) {
            const double v = c.params[k == 1 ? 0 : i];
            if (v < 0 || v != std::floor(v)) throw UsageError("hermite indices must be non-negative integers");
            alpha[i] = (k == 1 && i > 0) ? 0 : static_cast<int>(v);
        }
        c.field = hermite_field(alpha);
    } else {
        throw UsageError("unknown catalog function '" + name + "'");
    }
    return c;
}

} // namespace fracext
