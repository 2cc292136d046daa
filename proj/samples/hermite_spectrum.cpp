// Fractional harmonic oscillator on Hermite functions: quadrature against the exact eigenvalue (2k+1)^sigma.
#include <cmath>
#include <cstdio>

#include "fracext/fracext.hpp"

using namespace fracext;

int main() {
    const FracOrder order(0.3);
    const Point x{0.4};
    std::printf("%3s %18s %18s %10s\n", "k", "quadrature", "exact", "error");
    for (int k = 0; k <= 6; ++k) {
        const auto h = hermite_field(MultiIndex{k});
        const double got = frac_hermite(h, x, order);
        const double exact = std::pow(2.0 * k + 1.0, order.sigma()) * h(x);
        std::printf("%3d %18.12f %18.12f %10.2e\n", k, got, exact, std::fabs(got - exact));
    }
    ScalarField bowl;
    bowl.dim = 1;
    bowl.eval = [](const Point& z) { return z[0] * z[0] * std::exp(-z[0] * z[0]); };
    bowl.decay = DecayInfo::schwartz(2.0, 1.0, 0.0);
    bowl.length_scale = 0.5;
    bowl.name = "bowl";
    const auto mp = check_maximum_principle(bowl, Point{0.0}, order);
    std::printf("\nmaximum principle at the zero minimum of z^2 exp(-z^2): value %.6f, %s\n", mp.value,
                mp.pass ? "holds" : "violated");
}
