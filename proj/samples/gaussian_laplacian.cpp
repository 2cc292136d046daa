// Fractional Laplacian of a Gaussian by two routes, next to its extension and Neumann trace.
#include <cstdio>

#include "fracext/fracext.hpp"

using namespace fracext;

int main() {
    const auto f = gaussian_field(1);
    const FracOrder order(0.5);
    std::printf("%6s %16s %16s %16s\n", "x", "singular", "heat", "-trace");
    for (double x : uniform_grid(-2.0, 2.0, 5)) {
        const Point p{x};
        const double si = frac_laplacian_si(f, p, order);
        const double heat = frac_laplacian_heat(f, p, order);
        const double trace = -neumann_trace(f, p, order, OperatorKind::Laplacian, TraceRoute::Integral).limit_value;
        std::printf("%6.2f %16.10f %16.10f %16.10f\n", x, si, heat, trace);
    }
    std::printf("\nextension u(0, y):\n");
    for (double y : {0.1, 0.5, 1.0, 2.0})
        std::printf("%6.2f %16.10f\n", y, poisson_extend(f, Point{0.0}, y, order, OperatorKind::Laplacian));
}
