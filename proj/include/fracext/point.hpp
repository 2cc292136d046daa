#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "errors.hpp"

namespace fracext {

constexpr int kMaxDim = 3;
constexpr double kPi = 3.14159265358979323846264338327950288;

/** @brief A point of R^n with n in {1,2,3}, stored inline. */
struct Point {
    std::array<double, kMaxDim> c{};
    int dim = 1;

    Point() = default;
    explicit Point(int n) : dim(n) { check_dim(n); }
    Point(std::initializer_list<double> v) : dim(static_cast<int>(v.size())) {
        check_dim(dim);
        int i = 0;
        for (double x : v) c[i++] = x;
    }

    static void check_dim(int n) {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension must be 1, 2 or 3");
    }

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    double norm2() const {
        double s = 0;
        for (int i = 0; i < dim; ++i) s += c[i] * c[i];
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    Point& operator+=(const Point& o) {
        for (int i = 0; i < dim; ++i) c[i] += o.c[i];
        return *this;
    }
    Point& operator-=(const Point& o) {
        for (int i = 0; i < dim; ++i) c[i] -= o.c[i];
        return *this;
    }
    Point& operator*=(double a) {
        for (int i = 0; i < dim; ++i) c[i] *= a;
        return *this;
    }
};

inline Point operator+(Point a, const Point& b) { return a += b; }
inline Point operator-(Point a, const Point& b) { return a -= b; }
inline Point operator*(double s, Point a) { return a *= s; }

inline double dot(const Point& a, const Point& b) {
    double s = 0;
    for (int i = 0; i < a.dim; ++i) s += a.c[i] * b.c[i];
    return s;
}

inline double dist2(const Point& a, const Point& b) {
    double s = 0;
    for (int i = 0; i < a.dim; ++i) {
        const double d = a.c[i] - b.c[i];
        s += d * d;
    }
    return s;
}

inline Point origin(int n) { return Point(n); }

/// Surface measure of the unit sphere S^{n-1}; 2 for n = 1.
inline double sphere_area(int n) {
    switch (n) {
    case 1: return 2.0;
    case 2: return 2.0 * kPi;
    case 3: return 4.0 * kPi;
    default: throw DomainError("dimension must be 1, 2 or 3");
    }
}

} // namespace fracext
