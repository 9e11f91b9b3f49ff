#pragma once
// Empirical growth hunting for the normalized counting oscillation.
//
// extreme_scan walks a u-grid, records E(u) with the two normalizations
//   norm1 = E / u^(2l - 1/2),   norm2 = norm1 / (log u)^(1/4),
// and is deterministically parallel (fixed chunks, in-order merge).
//
// mean_square integrates R(t)^2 dt with the substitution t = 2 pi u^2 up to
// geometric checkpoints and fits I(T) = C T^p in log-log; the synthetic
// harness in the tests drives the same profile code with known R shapes.

#include <functional>
#include <vector>

#include "weyllab/spectrum.hpp"

namespace weyllab {

struct ScanRecord {
    double u = 0.0;
    double t = 0.0;  // 2 pi u^2
    double E = 0.0;
    double norm1 = 0.0;
    double norm2 = 0.0;
};

std::vector<ScanRecord> extreme_scan(const HeisenbergManifold& m,
                                     double u_min, double u_max, double step,
                                     int workers = 1);

struct FitResult {
    double exponent = 0.0;
    double log_const = 0.0;  // natural log of C
    double residual = 0.0;   // rms of log residuals
};

// Least squares on (log x, log y); needs >= 2 distinct positive x and
// positive y.
FitResult exponent_fit(const std::vector<std::pair<double, double>>& xy);

struct MeanSquareResult {
    bool no_signal = false;
    std::vector<std::pair<double, double>> checkpoints;  // (T, integral)
    FitResult fit;
};

// Shared profile driver: R_of_t is squared and integrated in the u
// variable (dt = 4 pi u du) by trapezoid with the given step, reporting
// cumulative values at n_checkpoints geometric T values in [t_lo, t_max].
MeanSquareResult mean_square_profile(const std::function<double(double)>& R_of_t,
                                     double t_lo, double t_max,
                                     int n_checkpoints, double u_step,
                                     int workers = 1);

// The oscillation-based instance: R(t) recovered from E(u) by undoing the
// 2^(l-2) (l-1)! / prod r normalization.
MeanSquareResult mean_square(const HeisenbergManifold& m, double t_lo,
                             double t_max, int n_checkpoints,
                             double u_step = 0.25, int workers = 1);

}  // namespace weyllab
