#pragma once
// Exact lattice-point counters and divisor-weighted sums.
//
// sum_of_squares_count(d, k)  : number of ways to write k as a sum of d
//                               squares of integers (signs and order count).
// ball_lattice_count_sq(d, K) : number of integer vectors v in Z^d with
//                               |v|^2 <= K, exact for any K that fits i64.
//                               Dimensions 1, 2 and 4 use divisor-sum
//                               identities in O(sqrt(K)); dimension 3 and
//                               d >= 5 slice over one coordinate.
// theta_ell(ell, n)           : sum of sqrt(h/m) (1 - h/m)^(ell-1) over
//                               factorizations n = h*m with m > h and
//                               m == h (mod 2).  Needs ell even.

#include <vector>

#include "weyllab/base.hpp"

namespace weyllab {

struct DivisorPair {
    i64 h;
    i64 m;  // h * m == n, h <= m
};

// Exact binomial coefficient; 0 when k > n.
BigCount binomial(unsigned long n, unsigned long k);

// r_d(k): representations of k as an ordered sum of d squares.
BigCount sum_of_squares_count(int dim, i64 k);

// Table r_d(0..kmax), built by convolving over one coordinate at a time.
std::vector<BigCount> sum_of_squares_table(int dim, i64 kmax);

// Lattice points of Z^d in the closed ball of squared radius K (integer).
BigCount ball_lattice_count_sq(int dim, i64 ksq);

// Same with a real radius x; the squared radius is floored in double.
BigCount ball_lattice_count(int dim, double x);

// All factorizations n = h*m with h <= m, ascending in h.
std::vector<DivisorPair> divisor_pairs(i64 n);

// Parity-constrained divisor sum with weight sqrt(h/m)(1-h/m)^(ell-1).
// Vanishes for n == 2 (mod 4) since h and m must share parity.
double theta_ell(int ell, i64 n);

}  // namespace weyllab
