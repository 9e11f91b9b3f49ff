#pragma once
// Fejer-kernel smoothing of the weighted pair sum.
//
// fejer_kernel(T, v) = T (sin(pi T v) / (pi T v))^2 integrates to 1 over the
// real line and to slightly less over [-1, 1].  Against a unit oscillation,
//   integral_{-1}^{1} fejer(T,v) e(Q v + delta) dv
//     = max(1 - Q/T, 0) e(delta) + O(1/Q),
// which fejer_transform_check verifies by adaptive quadrature.
//
// smoothed_pair_sum_numeric computes
//   I(T, U) = integral_{-1}^{1} pair_phase_sum(U + v, U) fejer(T, v) dv
// with a composite Gauss rule whose node count follows the top oscillation
// frequency; smoothed_pair_sum_truncated is the closed form obtained by
// integrating termwise (triangle weights max(1 - sqrt(n)/T, 0) on n <= T^2)
// together with the per-term defect budget
//   sum over D(U) of h^(-3/4) (2k-2h)^(l-1) / (2k-h)^(l+3/4).

#include <complex>

#include "weyllab/base.hpp"

namespace weyllab {

double fejer_kernel(double T, double v);

struct FejerCheck {
    std::complex<double> numeric;
    std::complex<double> closed;
    double defect = 0.0;  // |numeric - closed|
};

FejerCheck fejer_transform_check(double T, double Q, double delta);

double smoothed_pair_sum_numeric(int ell, double T, double U, int refine = 0);

struct TruncatedSmoothedSum {
    double value = 0.0;
    double tail_budget = 0.0;
};

TruncatedSmoothedSum smoothed_pair_sum_truncated(int ell, double T, double U);

}  // namespace weyllab
