#pragma once
// Shared aliases, error types and small integer helpers used across the
// library.  Exact integer work goes through GMP (mpz_class / mpq_class);
// __int128 is used for hot inner loops that provably fit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace weyllab {

using i64  = std::int64_t;
using u64  = std::uint64_t;
using i128 = __int128_t;
using u128 = __uint128_t;

// Arbitrary-precision counters and exact rationals.
using BigCount = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Error taxonomy.  Callers are expected to catch weyllab::Error at the CLI
// boundary; the concrete types exist so tests can assert on the cause.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Domain violations: bad manifold data, out-of-range arguments, odd ell in a
// pipeline that needs the sawtooth argument shift to cancel.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct OddEllUnsupported : DomainError {
    explicit OddEllUnsupported(const std::string& msg) : DomainError(msg) {}
};

// A stationary point fell outside the summation interval it was derived for.
struct StationaryPointOutOfRange : Error {
    explicit StationaryPointOutOfRange(const std::string& msg) : Error(msg) {}
};

// An adaptive quadrature could not reach its error target.
struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

// A bounded search ran out of candidates; carries the best candidate seen.
struct BudgetExhausted : Error {
    explicit BudgetExhausted(const std::string& msg, double best_seen)
        : Error(msg), best(best_seen) {}
    double best;
};

// A fit was asked for on data with no spread.
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Small integer helpers.
// ---------------------------------------------------------------------------

// Integer square root: largest s with s*s <= n.
inline i64 isqrt64(i64 n) {
    if (n < 0) throw DomainError("isqrt64: negative argument");
    if (n == 0) return 0;
    i64 s = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

// Floor division for possibly negative numerators, positive denominator.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

inline BigCount big_from_i128(i128 v) {
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    BigCount hi = static_cast<unsigned long>(x >> 64);
    BigCount lo = static_cast<unsigned long>(x & 0xffffffffffffffffULL);
    BigCount r = (hi << 64) + lo;
    return neg ? BigCount(-r) : r;
}

// Floor of an mpq as an mpz.
inline BigCount rational_floor(const Rational& q) {
    BigCount out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace weyllab
