#include "weyllab/vaaler.hpp"

#include <cmath>
#include <numbers>

namespace weyllab {

namespace {

constexpr double kPi = std::numbers::pi;

// z*cot(z) = 1 - z^2/3 - z^4/45 - 2 z^6/945 - z^8/4725 - 2 z^10/93555 - ...
// Good to full double precision for |z| <= 0.05.
double z_cot_z_series(double z) {
    double z2 = z * z;
    return 1.0 - z2 * (1.0 / 3.0 + z2 * (1.0 / 45.0 + z2 * (2.0 / 945.0 +
           z2 * (1.0 / 4725.0 + z2 * (2.0 / 93555.0)))));
}

}  // namespace

double psi(double w) {
    double f = w - std::floor(w);
    if (f >= 1.0) f = 0.0;  // guards the floor(1-ulp) rounding case
    return f - 0.5;
}

Rational psi_exact(const Rational& w) {
    Rational out = w - Rational(rational_floor(w));
    out -= Rational(1, 2);
    return out;
}

double rho(double xi) {
    if (!(xi > 0.0 && xi < 1.0))
        throw DomainError("rho: argument must lie strictly inside (0,1)");
    if (xi < 0.01) {
        double z = kPi * xi;
        return (1.0 - xi) * z_cot_z_series(z) + xi;
    }
    if (xi > 0.99) {
        double eta = 1.0 - xi;
        double z = kPi * eta;
        return xi * (1.0 - z_cot_z_series(z));
    }
    return kPi * xi * (1.0 - xi) * std::cos(kPi * xi) / std::sin(kPi * xi) + xi;
}

VaalerApproximant vaaler_approximant(int H) {
    if (H < 1) throw DomainError("vaaler_approximant: H must be >= 1");
    VaalerApproximant a;
    a.H = H;
    a.alpha.resize(static_cast<std::size_t>(H));
    a.beta.resize(static_cast<std::size_t>(H));
    double hp1 = static_cast<double>(H) + 1.0;
    for (int h = 1; h <= H; ++h) {
        double frac = static_cast<double>(h) / hp1;
        a.alpha[static_cast<std::size_t>(h - 1)] = rho(frac) / (kPi * h);
        a.beta[static_cast<std::size_t>(h - 1)] = (1.0 - frac) / hp1;
    }
    return a;
}

double sigma(const VaalerApproximant& a, double w) {
    // Reduce once; h * wf stays small enough that the 2 pi h wf arguments
    // carry no cancellation worth worrying about for H <= a few thousand.
    double wf = w - std::floor(w);
    double total = 0.0;
    for (int h = a.H; h >= 1; --h)
        total += a.alpha[static_cast<std::size_t>(h - 1)] *
                 std::sin(2.0 * kPi * h * wf);
    return total;
}

double sigma_star(const VaalerApproximant& a, double w) {
    double wf = w - std::floor(w);
    double total = 1.0 / (2.0 * (static_cast<double>(a.H) + 1.0));
    for (int h = a.H; h >= 1; --h)
        total += a.beta[static_cast<std::size_t>(h - 1)] *
                 std::cos(2.0 * kPi * h * wf);
    return total;
}

}  // namespace weyllab
