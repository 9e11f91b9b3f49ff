#pragma once
// Exact eigenvalue counting for the rational (2l+1)-dimensional Heisenberg
// manifolds and the decomposition of the counting remainder.
//
// The spectrum splits into two families:
//   type I  : 4 pi^2 (sum_j (a_j/r_j)^2 + |b|^2), (a,b) in Z^l x Z^l,
//   type II : 2 pi (n0^2 + n0 (2 n1 + l)), n0 >= 1, n1 >= 0, with
//             multiplicity 2 n0^l (r_1...r_l) C(n1 + l - 1, l - 1).
// Summing the type-II multiplicities over n1 <= N telescopes to
// C(N + l, l), which gives a closed-form count in O(u) integer operations.
//
// Writing floor(x) = x - 1/2 - psi(x) in that closed form splits the count
// into a smooth part (floor replaced by x - 1/2) and an oscillating part.
// oscillatory_remainder rescales (count - smooth) by 2^(l-2) (l-1)! / prod r;
// sawtooth_remainder is its leading sawtooth-sum model
//   E*(u) = - sum_{m <= u} m (u^2 - m^2)^(l-1) psi(u^2/(2m) - m/2),
// and the two differ by O(u^(2l-1)).  Both admit exact rational evaluation
// at integer u, which the scaling tests rely on.

#include <vector>

#include "weyllab/base.hpp"

namespace weyllab {

struct HeisenbergManifold {
    int ell;
    std::vector<i64> r;  // r_1 | r_2 | ... | r_ell, all >= 1

    HeisenbergManifold(int ell_, std::vector<i64> r_);
    static HeisenbergManifold standard(int ell_);  // all r_j = 1

    i64 r_product() const;
};

struct SpectrumEntry {
    i64 level;            // eigenvalue / (2 pi), an integer
    double lambda;        // 2 pi * level
    i64 n0;
    i64 n1;
    BigCount multiplicity;
};

// All type-II entries with eigenvalue <= t_max, sorted by (level, n0, n1).
std::vector<SpectrumEntry> type_II_entries(const HeisenbergManifold& m,
                                           double t_max);

// Type-II eigenvalues (with multiplicity) <= 2 pi s, s integer.
BigCount count_type_II_sq(const HeisenbergManifold& m, i64 s);

// Same against a real threshold u (counts eigenvalues <= 2 pi u^2); integer
// u routes through the exact path.
BigCount count_type_II(const HeisenbergManifold& m, double u);

// Type-I count: lattice points with 4 pi^2 (sum (a_j/r_j)^2 + |b|^2) <= t.
BigCount count_type_I(const HeisenbergManifold& m, double t);

BigCount count_total(const HeisenbergManifold& m, double t);

// count_total at t = 2 pi s for integer s (exact type-II split).
BigCount count_total_level(const HeisenbergManifold& m, i64 s);

// Leading Weyl term c t^(l + 1/2) with
// c = (r_1...r_l) / (2^(2l+1/2) pi^l Gamma(l + 3/2)).
double weyl_main_term(const HeisenbergManifold& m, double t);

// count_total(t) - weyl_main_term(t), as a double.
double weyl_remainder(const HeisenbergManifold& m, double t);

// Smooth model of the type-II count (floor replaced by x - 1/2).
double smooth_type_II(const HeisenbergManifold& m, double u);
Rational smooth_type_II_exact(const HeisenbergManifold& m, i64 s);

// Sawtooth-sum model E*(u) of the normalized oscillation; ell must be even.
double sawtooth_remainder(int ell, double u);
Rational sawtooth_remainder_exact(int ell, i64 u);

// Normalized oscillation E(u) = 2^(l-2) (l-1)! (count - smooth) / prod r.
double oscillatory_remainder(const HeisenbergManifold& m, double u);
Rational oscillatory_remainder_exact(const HeisenbergManifold& m, i64 u);

}  // namespace weyllab
