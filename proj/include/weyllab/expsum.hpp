#pragma once
// Oscillating sums attached to the type-II remainder and their second
// derivative ("B-process") transform.
//
// The building block is the dyadic block sum over m in (M_{j+1}, M_j],
// M_j = u 2^-j, of  G(m) e(F(m))  with
//   G(xi) = xi (u^2 - xi^2)^(l-1),   F(xi) = -h (u^2 - xi^2) / (2 xi).
// F' decreases along the block, F'(M_j) = h (2^(2j-1) + 1/2) exactly, and
// the stationary point of F(xi) - k xi is xi* = u sqrt(h / (2k - h)).
// Transforming the block turns it into a sum over the frequency window
// k in [F'(M_j), F'(M_{j+1})) of
//   e(-1/8) h^(3/4) u^(2l-1/2) (2k-2h)^(l-1) (2k-h)^(-l-1/4) e(-u sqrt(h(2k-h)))
// plus an error of shape Z (sqrt(Y) + log(2 + window length)) with
// X = M_j, Y = M_j^3/(h u^2), Z = M_j u^(2l-2).
//
// Aggregating all blocks and all h <= U with the degree-floor(U) sawtooth
// approximant gives the weighted double sum over the pair domain
//   D(U) = { (h,k) : 1 <= h <= U, h < k <= K_{h,U} },
//   K_{h,U} = h/2 + 2^(2J+1) h,
// evaluated by pair_phase_sum; phase_pair_table groups it by the phase
// integer n = h(2k-h) so downstream quadrature can reuse the weights.

#include <complex>
#include <functional>
#include <vector>

#include "weyllab/base.hpp"
#include "weyllab/vaaler.hpp"

namespace weyllab {

// J: minimal level count with (U - 1) 2^-(J+1) < 1.
int dyadic_level_count(double U);

struct DyadicDecomposition {
    double u = 0.0;
    double U = 0.0;
    int J = 0;
    std::vector<double> M;  // M[j] = u 2^-j for j = 0..J+1
};

DyadicDecomposition dyadic_decomposition(double u, double U);

struct PairDomain {
    double U = 0.0;
    int J = 0;
    i64 h_max = 0;
    // Largest k admitted for a given h: floor(h/2 + 2^(2J+1) h).
    i64 k_max(i64 h) const;
};

PairDomain pair_domain(double U);

// Generic direct sum of G(m) e(F(m)) over integers m in (A, B].
std::complex<double> exp_sum_direct(const std::function<double(double)>& G,
                                    const std::function<double(double)>& F,
                                    double A, double B);

// The dyadic block sum at level j (direct evaluation, double-double phases).
std::complex<double> dyadic_block_sum(int ell, i64 h, double u, int j);

// Stationary point xi* = u sqrt(h / (2k - h)); throws if 2k <= h.
double stationary_point(i64 h, double u, i64 k);

struct TransformReport {
    std::complex<double> direct;       // block sum evaluated directly
    std::complex<double> transformed;  // stationary-phase main term
    double bound = 0.0;  // Z (sqrt(Y) + log(2 + image interval length))
    double X = 0.0, Y = 0.0, Z = 0.0;
    i64 k_lo = 0, k_hi = 0;            // inclusive frequency window
    i64 window_len() const { return k_hi >= k_lo ? k_hi - k_lo + 1 : 0; }
    double kappa() const { return std::abs(direct - transformed) / bound; }
};

TransformReport vdc_transform(int ell, i64 h, double u, int j);

// One distinct phase integer n = h(2k-h) with its aggregated weights:
// alpha_weight multiplies sin(2 pi u sqrt(n) + pi/4), beta_weight the cosine.
struct PhasePair {
    i64 n = 0;
    double alpha_weight = 0.0;
    double beta_weight = 0.0;
};

std::vector<PhasePair> phase_pair_table(int ell, double U,
                                        const VaalerApproximant& a);

double pair_phase_sum_from_table(const std::vector<PhasePair>& table,
                                 double u);

// Internal workhorse shared with tests: the same sum over an explicit list
// of (h, k) pairs.
double pair_phase_sum_over(int ell, double u, const VaalerApproximant& a,
                           const std::vector<std::pair<i64, i64>>& pairs);

// The full weighted double sum over D(U); requires a.H == floor(U).
double pair_phase_sum(int ell, double u, double U,
                      const VaalerApproximant& a);

}  // namespace weyllab
