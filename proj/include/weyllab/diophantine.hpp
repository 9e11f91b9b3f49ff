#pragma once
// Simultaneous rational approximation certificates for the phase roots.
//
// The truncated smoothed sum keeps the phase integers n = h(2k-h) <= T^2
// that are not perfect squares.  dirichlet_search scans integers
// U = ceil(T^2), ceil(T^2)+1, ... for one with ||U sqrt(n)|| <= 1/16 for
// every target n simultaneously; the classical simultaneous approximation
// bound guarantees a hit with U <= T^2 * 16^(T^2).  The certificate stores
// the witness U and per-target distances and can be re-verified and
// round-tripped through plain text.

#include <string>
#include <vector>

#include "weyllab/base.hpp"

namespace weyllab {

// Distance to the nearest integer, in [0, 1/2].
double nearest_int_distance(double x);

struct ConstraintTarget {
    i64 n = 0;  // phase integer, not a perfect square
    i64 h = 0;  // witness pair: n = h (2k - h), h < k
    i64 k = 0;
};

// All non-square n <= T^2 with a factorization n = h m, m > h,
// m == h (mod 2); witness pair has the smallest h, then the smallest k.
std::vector<ConstraintTarget> constraint_targets(double T);

struct DirichletCertificate {
    double T = 0.0;
    i64 U = 0;
    std::vector<ConstraintTarget> targets;
    std::vector<double> distances;  // ||U sqrt(n)|| per target
    double max_distance = 0.0;
    bool bound_ok = false;  // U <= T^2 * 16^(T^2), checked in log space
};

// Ascending integer search from ceil(T^2); throws BudgetExhausted (carrying
// the best max-distance seen) after `budget` candidates.
DirichletCertificate dirichlet_search(double T, i64 budget = 10000000);

// Recomputes every distance at double-double precision.
bool verify_certificate(const DirichletCertificate& c);

std::string serialize_certificate(const DirichletCertificate& c);
DirichletCertificate parse_certificate(const std::string& text);

}  // namespace weyllab
