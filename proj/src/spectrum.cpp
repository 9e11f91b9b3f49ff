#include "weyllab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "weyllab/arith.hpp"
#include "weyllab/ddouble.hpp"
#include "weyllab/vaaler.hpp"

namespace weyllab {

namespace {

constexpr double kPi = std::numbers::pi;

i64 factorial_i64(int n) {
    i64 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool mul_fits_u128(u128 a, u128 b, u128& out) {
    if (a != 0 && b > std::numeric_limits<u128>::max() / a) return false;
    out = a * b;
    return true;
}

BigCount big_from_u128(u128 x) {
    BigCount hi = static_cast<unsigned long>(x >> 64);
    BigCount lo = static_cast<unsigned long>(x & 0xffffffffffffffffULL);
    return (hi << 64) + lo;
}

}  // namespace

HeisenbergManifold::HeisenbergManifold(int ell_, std::vector<i64> r_)
    : ell(ell_), r(std::move(r_)) {
    if (ell < 1) throw DomainError("HeisenbergManifold: ell must be >= 1");
    if (r.size() != static_cast<std::size_t>(ell))
        throw DomainError("HeisenbergManifold: need exactly ell entries in r");
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] < 1)
            throw DomainError("HeisenbergManifold: r entries must be >= 1");
        if (j > 0 && r[j] % r[j - 1] != 0)
            throw DomainError(
                "HeisenbergManifold: r must form a divisibility chain "
                "(each r_j divides r_{j+1})");
    }
}

HeisenbergManifold HeisenbergManifold::standard(int ell_) {
    return HeisenbergManifold(ell_, std::vector<i64>(
                                        static_cast<std::size_t>(ell_), 1));
}

i64 HeisenbergManifold::r_product() const {
    i64 p = 1;
    for (i64 v : r) {
        if (p > std::numeric_limits<i64>::max() / v)
            throw DomainError("HeisenbergManifold: r product overflows");
        p *= v;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Type-II counting.
// ---------------------------------------------------------------------------

std::vector<SpectrumEntry> type_II_entries(const HeisenbergManifold& m,
                                           double t_max) {
    if (t_max < 0.0) throw DomainError("type_II_entries: t_max must be >= 0");
    long double s_max = static_cast<long double>(t_max) / (2.0L * kPi);
    std::vector<SpectrumEntry> out;
    i64 rp = m.r_product();
    for (i64 n0 = 1;; ++n0) {
        long double base = static_cast<long double>(n0) * n0 +
                           static_cast<long double>(m.ell) * n0;
        if (base > s_max) break;
        BigCount stem = 2 * BigCount(rp);
        for (int j = 0; j < m.ell; ++j) stem *= n0;
        for (i64 n1 = 0;; ++n1) {
            long double level = base + 2.0L * n0 * n1;
            if (level > s_max) break;
            SpectrumEntry e;
            e.n0 = n0;
            e.n1 = n1;
            e.level = n0 * n0 + n0 * (2 * n1 + m.ell);
            e.lambda = 2.0 * kPi * static_cast<double>(e.level);
            e.multiplicity =
                stem * binomial(static_cast<unsigned long>(n1 + m.ell - 1),
                                static_cast<unsigned long>(m.ell - 1));
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  if (a.level != b.level) return a.level < b.level;
                  if (a.n0 != b.n0) return a.n0 < b.n0;
                  return a.n1 < b.n1;
              });
    return out;
}

BigCount count_type_II_sq(const HeisenbergManifold& m, i64 s) {
    if (s < 0) throw DomainError("count_type_II_sq: s must be >= 0");
    const int ell = m.ell;
    const i64 rp = m.r_product();
    const i64 lfact = factorial_i64(ell);
    u128 acc = 0;
    BigCount spill = 0;
    for (i64 n0 = 1; n0 * n0 + static_cast<i64>(ell) * n0 <= s; ++n0) {
        i64 N = (s - n0 * n0 - static_cast<i64>(ell) * n0) / (2 * n0);
        // weight = 2 * rp * n0^ell, C = C(N + ell, ell)
        u128 weight = 2 * static_cast<u128>(rp);
        bool fits = true;
        for (int j = 0; j < ell && fits; ++j)
            fits = mul_fits_u128(weight, static_cast<u128>(n0), weight);
        u128 c = 1;
        for (int i = 1; i <= ell && fits; ++i)
            fits = mul_fits_u128(c, static_cast<u128>(N + i), c);
        u128 term = 0;
        if (fits) {
            c /= static_cast<u128>(lfact);  // product of ell consecutive ints
            fits = mul_fits_u128(weight, c, term);
        }
        if (fits && term <= std::numeric_limits<u128>::max() - acc) {
            acc += term;
        } else {
            BigCount bc = binomial(static_cast<unsigned long>(N + ell),
                                   static_cast<unsigned long>(ell));
            BigCount w = 2 * BigCount(rp);
            for (int j = 0; j < ell; ++j) w *= n0;
            spill += w * bc;
        }
    }
    return spill + big_from_u128(acc);
}

namespace {

// Real-threshold variant: counts type-II eigenvalues <= 2 pi s_real.
BigCount count_type_II_real(const HeisenbergManifold& m, long double s_real) {
    if (s_real < 0.0L) return 0;
    if (s_real <= 9.0e18L) {
        // Exact integer threshold: floor(s_real) keeps the same count since
        // levels are integers.
        return count_type_II_sq(m, static_cast<i64>(std::floor(s_real)));
    }
    throw DomainError("count_type_II: threshold too large");
}

}  // namespace

BigCount count_type_II(const HeisenbergManifold& m, double u) {
    if (u < 0.0) throw DomainError("count_type_II: u must be >= 0");
    if (u == std::floor(u) && u <= 3.0e9) {
        i64 ui = static_cast<i64>(u);
        return count_type_II_sq(m, ui * ui);
    }
    long double s = static_cast<long double>(u) * static_cast<long double>(u);
    return count_type_II_real(m, s);
}

// ---------------------------------------------------------------------------
// Type-I counting.
// ---------------------------------------------------------------------------

namespace {

// Counts (a, b) in Z^l x Z^l with sum_j (a_j L / r_j)^2 + L^2 |b|^2 <= Ksc,
// recursing over the a coordinates.  All comparisons are integer-exact once
// Ksc is fixed.
BigCount scaled_type_I(const HeisenbergManifold& m, int j, i64 rem, i64 L) {
    if (j == m.ell) {
        i64 bsq = rem / (L * L);
        return ball_lattice_count_sq(m.ell, bsq);
    }
    i64 w = L / m.r[static_cast<std::size_t>(j)];
    i64 wsq = w * w;
    BigCount total = scaled_type_I(m, j + 1, rem, L);  // a_j = 0
    for (i64 a = 1; a * a * wsq <= rem; ++a)
        total += 2 * scaled_type_I(m, j + 1, rem - a * a * wsq, L);
    return total;
}

BigCount count_type_I_xsq(const HeisenbergManifold& m, long double xsq) {
    if (xsq < 0.0L) return 0;
    bool ones = true;
    for (i64 v : m.r) ones = ones && (v == 1);
    if (ones) {
        if (xsq > 9.0e18L) throw DomainError("count_type_I: t too large");
        return ball_lattice_count_sq(2 * m.ell,
                                     static_cast<i64>(std::floor(xsq)));
    }
    i64 L = 1;
    for (i64 v : m.r) L = std::lcm(L, v);
    long double scaled = xsq * static_cast<long double>(L) *
                         static_cast<long double>(L);
    if (scaled > 9.0e18L) throw DomainError("count_type_I: t too large");
    i64 ksc = static_cast<i64>(std::floor(scaled));
    return scaled_type_I(m, 0, ksc, L);
}

}  // namespace

BigCount count_type_I(const HeisenbergManifold& m, double t) {
    if (t < 0.0) throw DomainError("count_type_I: t must be >= 0");
    // Boundary convention: the squared radius t / (4 pi^2) is resolved in
    // double precision.
    double xsq = t / (4.0 * kPi * kPi);
    return count_type_I_xsq(m, static_cast<long double>(xsq));
}

BigCount count_total(const HeisenbergManifold& m, double t) {
    if (t < 0.0) throw DomainError("count_total: t must be >= 0");
    long double s = static_cast<long double>(t) / (2.0L * kPi);
    return count_type_I(m, t) + count_type_II_real(m, s);
}

BigCount count_total_level(const HeisenbergManifold& m, i64 s) {
    if (s < 0) throw DomainError("count_total_level: s must be >= 0");
    // t = 2 pi s; the type-I radius is s / (2 pi), resolved in long double.
    long double xsq = static_cast<long double>(s) / (2.0L * kPi);
    return count_type_I_xsq(m, xsq) + count_type_II_sq(m, s);
}

// ---------------------------------------------------------------------------
// Main term and remainder.
// ---------------------------------------------------------------------------

double weyl_main_term(const HeisenbergManifold& m, double t) {
    if (t < 0.0) throw DomainError("weyl_main_term: t must be >= 0");
    if (t == 0.0) return 0.0;
    double rp = static_cast<double>(m.r_product());
    double denom = std::pow(2.0, 2.0 * m.ell + 0.5) * std::pow(kPi, m.ell) *
                   std::tgamma(m.ell + 1.5);
    return rp / denom * std::pow(t, m.ell + 0.5);
}

double weyl_remainder(const HeisenbergManifold& m, double t) {
    BigCount n = count_total(m, t);
    return n.get_d() - weyl_main_term(m, t);
}

// ---------------------------------------------------------------------------
// Smooth type-II model.
// ---------------------------------------------------------------------------

double smooth_type_II(const HeisenbergManifold& m, double u) {
    if (u < 0.0) throw DomainError("smooth_type_II: u must be >= 0");
    const int ell = m.ell;
    long double s = static_cast<long double>(u) * u;
    KahanSum sum;
    for (i64 n0 = 1; static_cast<long double>(n0) * (n0 + ell) <= s; ++n0) {
        double x = static_cast<double>(
            (s - static_cast<long double>(n0) * n0 -
             static_cast<long double>(ell) * n0) /
            (2.0L * n0));
        double term = 1.0;
        for (int j = 0; j < ell; ++j) term *= static_cast<double>(n0);
        for (int i = 1; i <= ell; ++i) term *= x + (i - 0.5);
        sum.add(term);
    }
    return 2.0 * static_cast<double>(m.r_product()) /
           static_cast<double>(factorial_i64(ell)) * sum.value();
}

namespace {

// P(s) = sum_{n0} prod_{i=1..ell} (s - n0^2 - (ell + 1 - 2 i) n0): the
// polynomial part of the smooth model with all denominators cleared, so
// smooth = rp * P / (ell! * 2^(ell-1)).
BigCount smooth_poly_sum(int ell, i64 s) {
    BigCount total = 0;
    for (i64 n0 = 1; n0 * n0 + static_cast<i64>(ell) * n0 <= s; ++n0) {
        BigCount prod = 1;
        for (int i = 1; i <= ell; ++i) {
            i64 shift = static_cast<i64>(ell + 1 - 2 * i) * n0;
            prod *= BigCount(s - n0 * n0 - shift);
        }
        total += prod;
    }
    return total;
}

}  // namespace

Rational smooth_type_II_exact(const HeisenbergManifold& m, i64 s) {
    if (s < 0) throw DomainError("smooth_type_II_exact: s must be >= 0");
    const int ell = m.ell;
    BigCount den = BigCount(factorial_i64(ell)) << (ell - 1);
    BigCount num = smooth_poly_sum(ell, s);
    num *= m.r_product();
    Rational out(num, den);
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Sawtooth model E* and the normalized oscillation E.
// ---------------------------------------------------------------------------

double sawtooth_remainder(int ell, double u) {
    if (ell < 1) throw DomainError("sawtooth_remainder: ell must be >= 1");
    if (ell % 2 != 0)
        throw OddEllUnsupported(
            "sawtooth_remainder: odd ell is not supported (the sawtooth "
            "argument shift by ell/2 no longer cancels)");
    if (u < 0.0) throw DomainError("sawtooth_remainder: u must be >= 0");
    // Error budget: the sawtooth argument (u^2 - m^2)/(2m) can reach ~u^2/2,
    // so its fractional part is extracted in double-double (abs error
    // ~ |w| 2^-104 <= 1e-21 for u <= 1e5); amplitudes are plain doubles.
    dd usq = two_prod(u, u);
    KahanSum sum;
    for (i64 m = 1; static_cast<double>(m) <= u; ++m) {
        double msq = static_cast<double>(m) * static_cast<double>(m);
        dd w = dd_div_d(dd_add_d(usq, -msq), 2.0 * static_cast<double>(m));
        dd f = dd_fract(w);
        double psi_w = (f.hi + f.lo) - 0.5;
        // (u - m)(u + m) keeps the amplitude accurate near m ~ u, where the
        // direct difference u^2 - m^2 would cancel.
        double amp = (u - static_cast<double>(m)) * (u + static_cast<double>(m));
        double term = static_cast<double>(m);
        for (int i = 1; i < ell; ++i) term *= amp;
        sum.add(term * psi_w);
    }
    return -sum.value();
}

Rational sawtooth_remainder_exact(int ell, i64 u) {
    if (ell < 1) throw DomainError("sawtooth_remainder_exact: ell >= 1");
    if (ell % 2 != 0)
        throw OddEllUnsupported("sawtooth_remainder_exact: ell must be even");
    if (u < 0) throw DomainError("sawtooth_remainder_exact: u must be >= 0");
    if (u > 3000000000LL)
        throw DomainError("sawtooth_remainder_exact: u^2 overflows");
    // m (u^2 - m^2)^(l-1) psi((u^2 - m^2)/(2m)) equals
    // (u^2 - m^2)^(l-1) ((u^2 - m^2) mod 2m - m) / 2 exactly, so the whole
    // sum is a half-integer.
    BigCount acc = 0;
    for (i64 m = 1; m <= u; ++m) {
        i64 a = u * u - m * m;
        BigCount pw = 1;
        for (int i = 1; i < ell; ++i) pw *= BigCount(a);
        acc += pw * BigCount(a % (2 * m) - m);
    }
    BigCount num = -acc;
    Rational out(num, BigCount(2));
    out.canonicalize();
    return out;
}

double oscillatory_remainder(const HeisenbergManifold& m, double u) {
    if (u < 0.0) throw DomainError("oscillatory_remainder: u must be >= 0");
    const int ell = m.ell;
    // Form E = 2^(l-1)/l * sum n0^l * D(n0) where D is the difference
    // between the floor product and the midpoint product, expanded in
    // elementary symmetric polynomials.  This avoids the catastrophic
    // cancellation of subtracting two ~u^(2l+1) counts.
    dd usq = two_prod(u, u);
    long double s_ld = static_cast<long double>(u) * u;
    std::vector<double> e(static_cast<std::size_t>(ell) + 1, 0.0);
    KahanSum sum;
    for (i64 n0 = 1; static_cast<long double>(n0) * (n0 + ell) <= s_ld;
         ++n0) {
        double lin = static_cast<double>(n0) * n0 +
                     static_cast<double>(ell) * n0;  // exact for n0 <= 3e7
        dd x = dd_div_d(dd_add_d(usq, -lin), 2.0 * static_cast<double>(n0));
        dd f = dd_fract(x);
        double d = 0.5 - (f.hi + f.lo);
        // elementary symmetric polynomials of y_i = x + i - 1/2
        std::fill(e.begin(), e.end(), 0.0);
        e[0] = 1.0;
        for (int i = 1; i <= ell; ++i) {
            double y = static_cast<double>(x.hi + (i - 0.5));
            for (int k = i; k >= 1; --k)
                e[static_cast<std::size_t>(k)] +=
                    y * e[static_cast<std::size_t>(k - 1)];
        }
        double diff = 0.0, dp = 1.0;
        for (int k = 1; k <= ell; ++k) {
            dp *= d;
            diff += dp * e[static_cast<std::size_t>(ell - k)];
        }
        double wgt = 1.0;
        for (int j = 0; j < ell; ++j) wgt *= static_cast<double>(n0);
        sum.add(wgt * diff);
    }
    return std::pow(2.0, ell - 1) / static_cast<double>(ell) * sum.value();
}

Rational oscillatory_remainder_exact(const HeisenbergManifold& m, i64 u) {
    if (u < 0) throw DomainError("oscillatory_remainder_exact: u >= 0");
    if (u > 3000000000LL)
        throw DomainError("oscillatory_remainder_exact: u^2 overflows");
    const int ell = m.ell;
    i64 s = u * u;
    BigCount count = count_type_II_sq(m, s);
    BigCount poly = smooth_poly_sum(ell, s);
    Rational pref;
    if (ell >= 2) {
        BigCount num = BigCount(factorial_i64(ell - 1)) << (ell - 2);
        pref = Rational(num, BigCount(m.r_product()));
    } else {
        pref = Rational(BigCount(1), BigCount(2 * m.r_product()));
    }
    pref.canonicalize();
    Rational out = pref * Rational(count) - Rational(poly, BigCount(2 * ell));
    out.canonicalize();
    return out;
}

}  // namespace weyllab
