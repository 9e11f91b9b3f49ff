// ============================================================================
// Sawtooth approximant suite.
//
// Hand-derived anchors used below:
//   rho(1/2)  = pi (1/4) cot(pi/2) + 1/2 = 1/2            (cot term vanishes)
//   rho(1/4)  = pi (3/16) cot(pi/4) + 1/4 = 3 pi/16 + 1/4
//   rho -> 1 as xi -> 0+,  rho -> 0 as xi -> 1-
//   H = 1: alpha_1 = rho(1/2)/pi = 1/(2 pi),  beta_1 = (1 - 1/2)/2 = 1/4
//   sigma_star(0) = 1/(2H+2) + sum beta_h = 1/2 for every H
//   integral of sigma_star over one period = its constant term 1/(2H+2)
// The majorant inequality |psi + sigma| <= sigma_star is sampled here at
// modest volume; the acceptance gate runs the full 10^5-per-H sweep.
// ============================================================================

#include <cmath>

#include "doctest.h"
#include "weyllab/base.hpp"
#include "weyllab/rng.hpp"
#include "weyllab/vaaler.hpp"

using namespace weyllab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("sawtooth values and exact rational version") {
    CHECK(psi(0.0) == -0.5);
    CHECK(psi(1.0) == -0.5);
    CHECK(psi(0.25) == -0.25);
    CHECK(psi(0.75) == 0.25);
    CHECK(psi(-0.25) == 0.25);
    CHECK(psi(123456.5) == 0.0);

    CHECK(psi_exact(Rational(1, 3)) == Rational(-1, 6));
    CHECK(psi_exact(Rational(-1, 4)) == Rational(1, 4));
    CHECK(psi_exact(Rational(7, 1)) == Rational(-1, 2));
}

TEST_CASE("rho: spot values, endpoint limits, series joins") {
    CHECK(rho(0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rho(0.25) == doctest::Approx(3.0 * kPi / 16.0 + 0.25).epsilon(1e-14));

    // Limits: rho(0+) = 1, rho(1-) = 0.
    CHECK(rho(1e-8) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(rho(1e-6) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(std::fabs(rho(1.0 - 1e-8)) < 1e-7);
    CHECK(std::fabs(rho(1.0 - 1e-6)) < 1e-5);

    // The series branches continue the direct formula smoothly.  The
    // straddle is 1e-12 wide so the function's own slope (|rho'| ~ 0.066
    // at both joins) contributes ~1e-13 and the check isolates the seam.
    for (double join : {0.01, 0.99}) {
        double lo = rho(join - 1e-12);
        double hi = rho(join + 1e-12);
        CHECK(std::fabs(lo - hi) < 1e-10);
    }

    CHECK_THROWS_AS(rho(0.0), DomainError);
    CHECK_THROWS_AS(rho(1.0), DomainError);
    CHECK_THROWS_AS(rho(-0.5), DomainError);
}

TEST_CASE("approximant coefficients at small degree") {
    VaalerApproximant a1 = vaaler_approximant(1);
    REQUIRE(a1.alpha.size() == 1);
    CHECK(a1.alpha[0] == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(a1.beta[0] == doctest::Approx(0.25).epsilon(1e-14));

    VaalerApproximant a3 = vaaler_approximant(3);
    CHECK(a3.beta[0] == doctest::Approx(3.0 / 16.0).epsilon(1e-14));
    CHECK(a3.beta[1] == doctest::Approx(2.0 / 16.0).epsilon(1e-14));
    CHECK(a3.beta[2] == doctest::Approx(1.0 / 16.0).epsilon(1e-14));

    CHECK_THROWS_AS(vaaler_approximant(0), DomainError);
}

TEST_CASE("majorant structure: value 1/2 at integers, nonnegativity") {
    for (int H : {1, 2, 5, 16, 64}) {
        VaalerApproximant a = vaaler_approximant(H);
        CHECK(sigma_star(a, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(sigma(a, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
        // |psi + sigma| = sigma_star exactly at integers.
        CHECK(std::fabs(psi(0.0) + sigma(a, 0.0)) ==
              doctest::Approx(sigma_star(a, 0.0)).epsilon(1e-12));
        for (int j = 0; j <= 512; ++j) {
            double w = static_cast<double>(j) / 512.0;
            CHECK(sigma_star(a, w) >= -1e-13);
        }
    }
}

TEST_CASE("majorant inequality on seeded samples") {
    Sampler smp(987654321u);
    for (int H : {1, 2, 4, 16, 31}) {
        VaalerApproximant a = vaaler_approximant(H);
        for (int i = 0; i < 2000; ++i) {
            double w = smp.next_real(-2.0, 3.0);
            double margin = std::fabs(psi(w) + sigma(a, w)) - sigma_star(a, w);
            CHECK(margin <= 1e-12);
        }
    }
}

TEST_CASE("periodicity of both sums") {
    VaalerApproximant a = vaaler_approximant(9);
    for (double w : {0.123, 0.487, 0.901}) {
        CHECK(sigma(a, w) == doctest::Approx(sigma(a, w + 1.0)).epsilon(1e-12));
        CHECK(sigma_star(a, w) ==
              doctest::Approx(sigma_star(a, w - 3.0)).epsilon(1e-12));
    }
}

TEST_CASE("mean of the majorant equals its constant term") {
    // Composite Simpson on [0,1]; the trigonometric part integrates to zero,
    // leaving 1/(2H+2).
    for (int H : {1, 8}) {
        VaalerApproximant a = vaaler_approximant(H);
        const int n = 1 << 12;
        double acc = sigma_star(a, 0.0) + sigma_star(a, 1.0);
        for (int i = 1; i < n; ++i) {
            double w = static_cast<double>(i) / n;
            acc += (i % 2 ? 4.0 : 2.0) * sigma_star(a, w);
        }
        acc /= 3.0 * n;
        CHECK(acc == doctest::Approx(1.0 / (2.0 * H + 2.0)).epsilon(1e-10));
    }
}
