#pragma once
// Trigonometric approximation of the sawtooth psi(w) = w - floor(w) - 1/2.
//
// For a degree H the approximant is
//   sigma(w)      = sum_{h<=H} alpha_h sin(2 pi h w),
//   sigma_star(w) = sum_{h<=H} beta_h cos(2 pi h w) + 1/(2H+2),
// with alpha_h = rho(h/(H+1)) / (pi h), beta_h = (1 - h/(H+1)) / (H+1) and
// rho(x) = pi x (1-x) cot(pi x) + x.  The majorant property
//   |psi(w) + sigma(w)| <= sigma_star(w)   for every real w
// is what the verification suite exercises; equality holds at integers.

#include <vector>

#include "weyllab/base.hpp"

namespace weyllab {

// Sawtooth, value in [-1/2, 1/2); psi(integer) = -1/2.
double psi(double w);
Rational psi_exact(const Rational& w);

// rho on the open interval (0,1); series fallback near both endpoints.
double rho(double xi);

struct VaalerApproximant {
    int H = 0;
    std::vector<double> alpha;  // alpha[h-1] is the coefficient of h
    std::vector<double> beta;
};

VaalerApproximant vaaler_approximant(int H);

double sigma(const VaalerApproximant& a, double w);
double sigma_star(const VaalerApproximant& a, double w);

}  // namespace weyllab
