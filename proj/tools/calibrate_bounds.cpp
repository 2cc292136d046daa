// Fits the kernel-bound constants on the calibration grids and prints a table for bounds.hpp.
#include <cstdio>

#include "fracext/bounds.hpp"

int main() {
    using namespace fracext;
    const double margin = 1.1;
    const double heat = fit_bound_constant(heat_bound_samples(kHeatCalibration));
    std::printf("// raw heat fit %.6g\n", heat);
    for (double sigma : {0.25, 0.5, 0.75}) {
        const FracOrder order(sigma);
        const double f = fit_bound_constant(f_bound_samples(kFCalibration, order));
        const double b = fit_bound_constant(b_bound_samples(kBCalibration, order));
        std::printf("// raw fits sigma %.2f: F %.6g, B %.6g\n", sigma, f, b);
        std::printf("    {%.2f, %.4g, %.4g, %.4g},\n", sigma, margin * heat, margin * f, margin * b);
    }
    return 0;
}
