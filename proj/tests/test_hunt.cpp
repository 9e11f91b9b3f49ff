// ============================================================================
// Growth-hunt scaffolding: log-log fits, scan determinism, mean-square
// profiles.
//
// Oracle identities:
//   * The profile integrates R(2 pi u^2)^2 4 pi u du from u = 1, so with
//     R == 1 the running integral at checkpoint T is exactly T - 2 pi
//     (the integrand is linear in u; trapezoid + the partial panel are
//     exact for linear integrands).
//   * R(t) = t^(7/4) gives I(T) ~ T^(9/2) / (9/2); a log-log fit over
//     geometric checkpoints spanning [1e3, 1e6] must land on 4.5 well
//     inside +-0.05 (left-endpoint curvature bias is below 0.01).
// ============================================================================

#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "weyllab/base.hpp"
#include "weyllab/hunt.hpp"
#include "weyllab/rng.hpp"
#include "weyllab/spectrum.hpp"

using namespace weyllab;

TEST_CASE("exponent fit recovers exact power laws") {
    std::vector<std::pair<double, double>> quad;
    for (int i = 1; i <= 20; ++i) {
        double x = static_cast<double>(i);
        quad.emplace_back(x, x * x);
    }
    FitResult f = exponent_fit(quad);
    CHECK(f.exponent == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::fabs(f.log_const) < 1e-12);
    CHECK(f.residual < 1e-12);

    std::vector<std::pair<double, double>> pow45;
    for (int i = 0; i < 30; ++i) {
        double x = std::pow(10.0, i / 10.0);
        pow45.emplace_back(x, 5.0 * std::pow(x, 4.5));
    }
    FitResult g = exponent_fit(pow45);
    CHECK(g.exponent == doctest::Approx(4.5).epsilon(1e-9));
    CHECK(g.log_const == doctest::Approx(std::log(5.0)).epsilon(1e-9));
}

TEST_CASE("exponent fit under multiplicative noise") {
    Sampler rng(777);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 450; ++i) {
        double x = std::pow(100.0, rng.next_unit());  // log-uniform on [1,100]
        double noise = 1.0 + 0.05 * (2.0 * rng.next_unit() - 1.0);
        pts.emplace_back(x, 3.0 * std::pow(x, 2.5) * noise);
    }
    FitResult f = exponent_fit(pts);
    CHECK(std::fabs(f.exponent - 2.5) <= 0.05);
    CHECK(f.residual < 0.05);
}

TEST_CASE("exponent fit rejects degenerate data") {
    CHECK_THROWS_AS(exponent_fit({}), DegenerateInput);
    CHECK_THROWS_AS(exponent_fit({{2.0, 1.0}, {2.0, 3.0}, {2.0, 9.0}}),
                    DegenerateInput);
    CHECK_THROWS_AS(exponent_fit({{1.0, -1.0}, {2.0, 0.0}, {-3.0, 5.0}}),
                    DegenerateInput);
}

TEST_CASE("scan grid is deterministic across worker counts") {
    HeisenbergManifold m(2, {1, 1});
    auto one = extreme_scan(m, 2.0, 6.0, 0.5, 1);
    auto three = extreme_scan(m, 2.0, 6.0, 0.5, 3);
    REQUIRE(one.size() == 9);
    REQUIRE(three.size() == one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].u == three[i].u);
        CHECK(one[i].t == three[i].t);
        CHECK(one[i].E == three[i].E);
        CHECK(one[i].norm1 == three[i].norm1);
        CHECK(one[i].norm2 == three[i].norm2);
    }
    for (const auto& rec : one) {
        CHECK(rec.u >= 2.0);
        CHECK(rec.t == 2.0 * 3.14159265358979323846 * rec.u * rec.u);
        CHECK(rec.E == oscillatory_remainder(m, rec.u));
        CHECK(rec.norm1 == rec.E / std::pow(rec.u, 3.5));
        CHECK(rec.norm2 == rec.norm1 / std::pow(std::log(rec.u), 0.25));
    }
}

TEST_CASE("scan preconditions") {
    HeisenbergManifold m(1, {1});
    CHECK_THROWS_AS(extreme_scan(m, 1.0, 5.0, 0.5), DomainError);
    CHECK_THROWS_AS(extreme_scan(m, 3.0, 2.0, 0.5), DomainError);
    CHECK_THROWS_AS(extreme_scan(m, 2.0, 5.0, 0.0), DomainError);
}

TEST_CASE("mean square profile: constant R integrates to T - 2 pi") {
    auto one = [](double) { return 1.0; };
    MeanSquareResult r = mean_square_profile(one, 100.0, 1.0e4, 12, 0.25);
    REQUIRE(!r.no_signal);
    REQUIRE(r.checkpoints.size() == 12);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (const auto& [T, I] : r.checkpoints)
        CHECK(I == doctest::Approx(T - two_pi).epsilon(1e-9));
    // d/dlogT of log(T - 2 pi) over this range is just above 1.
    CHECK(r.fit.exponent == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("mean square profile: power-law R lands on the predicted slope") {
    auto R = [](double t) { return std::pow(t, 1.75); };
    MeanSquareResult r = mean_square_profile(R, 1.0e3, 1.0e6, 16, 0.25);
    REQUIRE(!r.no_signal);
    CHECK(std::fabs(r.fit.exponent - 4.5) <= 0.05);
}

TEST_CASE("mean square profile: zero R reports no signal") {
    auto zero = [](double) { return 0.0; };
    MeanSquareResult r = mean_square_profile(zero, 100.0, 1.0e4, 8, 0.5);
    CHECK(r.no_signal);
    CHECK(r.checkpoints.empty());
}

TEST_CASE("mean square on a real manifold") {
    HeisenbergManifold m(1, {1});
    MeanSquareResult r = mean_square(m, 100.0, 5000.0, 8);
    REQUIRE(!r.no_signal);
    REQUIRE(r.checkpoints.size() == 8);
    for (std::size_t i = 1; i < r.checkpoints.size(); ++i) {
        CHECK(r.checkpoints[i].first > r.checkpoints[i - 1].first);
        CHECK(r.checkpoints[i].second >= r.checkpoints[i - 1].second);
    }
    CHECK(r.checkpoints.back().second > 0.0);
}

TEST_CASE("mean square profile preconditions") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(mean_square_profile(one, 500.0, 100.0, 8, 0.5), DomainError);
    CHECK_THROWS_AS(mean_square_profile(one, 100.0, 5000.0, 1, 0.5),
                    DomainError);
    CHECK_THROWS_AS(mean_square_profile(one, 100.0, 5000.0, 8, 0.0),
                    DomainError);
}
