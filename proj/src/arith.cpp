#include "weyllab/arith.hpp"

#include <cmath>

namespace weyllab {

BigCount binomial(unsigned long n, unsigned long k) {
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// ---------------------------------------------------------------------------
// Sums of squares.
// ---------------------------------------------------------------------------

BigCount sum_of_squares_count(int dim, i64 k) {
    if (dim < 1) throw DomainError("sum_of_squares_count: dim must be >= 1");
    if (k < 0) return 0;
    if (dim == 1) {
        if (k == 0) return 1;
        i64 s = isqrt64(k);
        return (s * s == k) ? 2 : 0;
    }
    BigCount total = 0;
    i64 s = isqrt64(k);
    for (i64 c = -s; c <= s; ++c)
        total += sum_of_squares_count(dim - 1, k - c * c);
    return total;
}

std::vector<BigCount> sum_of_squares_table(int dim, i64 kmax) {
    if (dim < 1) throw DomainError("sum_of_squares_table: dim must be >= 1");
    if (kmax < 0) throw DomainError("sum_of_squares_table: kmax must be >= 0");
    std::size_t n = static_cast<std::size_t>(kmax) + 1;
    std::vector<BigCount> row(n, 0);
    row[0] = 1;
    for (i64 c = 1; c * c <= kmax; ++c) row[static_cast<std::size_t>(c * c)] = 2;
    for (int d = 2; d <= dim; ++d) {
        std::vector<BigCount> next(n, 0);
        for (i64 k = 0; k <= kmax; ++k) {
            BigCount acc = row[static_cast<std::size_t>(k)];  // c = 0 term
            for (i64 c = 1; c * c <= k; ++c)
                acc += 2 * row[static_cast<std::size_t>(k - c * c)];
            next[static_cast<std::size_t>(k)] = acc;
        }
        row.swap(next);
    }
    return row;
}

// ---------------------------------------------------------------------------
// Ball counts.  The d = 2 and d = 4 fast paths rest on the classical divisor
// identities r_2(k) = 4 sum_{d | k, d odd} (-1)^((d-1)/2) and
// r_4(k) = 8 sum_{d | k, 4 !| d} d; summing over k <= K and grouping by the
// quotient floor(K/d) gives O(sqrt(K)) loops.
// ---------------------------------------------------------------------------

namespace {

// Count of d <= x with d == 1 (mod 4) minus count with d == 3 (mod 4).
inline i64 chi4_prefix(i64 x) { return (x + 3) / 4 - (x + 1) / 4; }

// sum_{d <= K, d odd} chi4(d) * floor(K/d), blocked on equal quotients.
i128 gauss_divisor_sum(i64 K) {
    i128 total = 0;
    for (i64 d = 1; d <= K;) {
        i64 v = K / d;
        i64 d_hi = K / v;
        total += static_cast<i128>(v) * (chi4_prefix(d_hi) - chi4_prefix(d - 1));
        d = d_hi + 1;
    }
    return total;
}

// T(L) = sum_{e <= L} e * floor(L/e), blocked on equal quotients.
i128 weighted_divisor_sum(i64 L) {
    i128 total = 0;
    for (i64 e = 1; e <= L;) {
        i64 v = L / e;
        i64 e_hi = L / v;
        // sum of e over [e, e_hi]
        i128 span = static_cast<i128>(e) + e_hi;
        span *= (e_hi - e + 1);
        total += (span / 2) * v;
        e = e_hi + 1;
    }
    return total;
}

}  // namespace

BigCount ball_lattice_count_sq(int dim, i64 ksq) {
    if (dim < 1) throw DomainError("ball_lattice_count_sq: dim must be >= 1");
    if (ksq < 0) throw DomainError("ball_lattice_count_sq: negative radius^2");
    switch (dim) {
        case 1:
            return BigCount(2 * isqrt64(ksq) + 1);
        case 2:
            return big_from_i128(1 + 4 * gauss_divisor_sum(ksq));
        case 4: {
            i128 t = weighted_divisor_sum(ksq) - 4 * weighted_divisor_sum(ksq / 4);
            return big_from_i128(1 + 8 * t);
        }
        default: {
            // Slice over the first coordinate.
            BigCount total = ball_lattice_count_sq(dim - 1, ksq);
            for (i64 c = 1; c * c <= ksq; ++c)
                total += 2 * ball_lattice_count_sq(dim - 1, ksq - c * c);
            return total;
        }
    }
}

BigCount ball_lattice_count(int dim, double x) {
    if (x < 0.0) throw DomainError("ball_lattice_count: negative radius");
    double xsq = x * x;
    if (xsq >= 9.2e18) throw DomainError("ball_lattice_count: radius too large");
    return ball_lattice_count_sq(dim, static_cast<i64>(std::floor(xsq)));
}

// ---------------------------------------------------------------------------
// Divisor pairs and the parity-weighted divisor sum.
// ---------------------------------------------------------------------------

std::vector<DivisorPair> divisor_pairs(i64 n) {
    if (n < 1) throw DomainError("divisor_pairs: n must be >= 1");
    std::vector<DivisorPair> out;
    for (i64 h = 1; h * h <= n; ++h)
        if (n % h == 0) out.push_back({h, n / h});
    return out;
}

double theta_ell(int ell, i64 n) {
    if (ell < 1) throw DomainError("theta_ell: ell must be >= 1");
    if (ell % 2 != 0)
        throw OddEllUnsupported("theta_ell: odd ell breaks the sawtooth "
                                "argument shift; only even ell is supported");
    if (n < 1) throw DomainError("theta_ell: n must be >= 1");
    double total = 0.0;
    for (const auto& p : divisor_pairs(n)) {
        if (p.m == p.h) continue;  // need m > h strictly
        if ((p.m - p.h) % 2 != 0) continue;
        double ratio = static_cast<double>(p.h) / static_cast<double>(p.m);
        double w = std::sqrt(ratio);
        double base = 1.0 - ratio;
        for (int i = 1; i < ell; ++i) w *= base;
        total += w;
    }
    return total;
}

}  // namespace weyllab
