#include "weyllab/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weyllab/ddouble.hpp"

namespace weyllab {

namespace {

constexpr double kPi = std::numbers::pi;

// e(x) = exp(2 pi i x) with x already reduced to a small range.
std::complex<double> e_of(double x) {
    double a = 2.0 * kPi * x;
    return {std::cos(a), std::sin(a)};
}

// e(frac(w)) for a double-double w; keeps phase accuracy at large |w|.
std::complex<double> e_of_dd(dd w) {
    dd f = dd_fract(w);
    return e_of(f.hi + f.lo);
}

double ipow(double base, int n) {
    double out = 1.0;
    for (int i = 0; i < n; ++i) out *= base;
    return out;
}

}  // namespace

int dyadic_level_count(double U) {
    if (U < 1.0) throw DomainError("dyadic_level_count: U must be >= 1");
    int J = 0;
    while ((U - 1.0) * std::ldexp(1.0, -(J + 1)) >= 1.0) ++J;
    return J;
}

DyadicDecomposition dyadic_decomposition(double u, double U) {
    if (u < 1.0) throw DomainError("dyadic_decomposition: u must be >= 1");
    DyadicDecomposition d;
    d.u = u;
    d.U = U;
    d.J = dyadic_level_count(U);
    d.M.resize(static_cast<std::size_t>(d.J) + 2);
    for (int j = 0; j <= d.J + 1; ++j)
        d.M[static_cast<std::size_t>(j)] = std::ldexp(u, -j);
    return d;
}

i64 PairDomain::k_max(i64 h) const {
    // floor(h/2 + 2^(2J+1) h) = floor(h (2^(2J+2) + 1) / 2)
    i64 scale = (static_cast<i64>(1) << (2 * J + 2)) + 1;
    return h * scale / 2;
}

PairDomain pair_domain(double U) {
    PairDomain d;
    d.U = U;
    d.J = dyadic_level_count(U);
    d.h_max = static_cast<i64>(std::floor(U));
    return d;
}

std::complex<double> exp_sum_direct(const std::function<double(double)>& G,
                                    const std::function<double(double)>& F,
                                    double A, double B) {
    KahanSum re, im;
    i64 m_lo = static_cast<i64>(std::floor(A)) + 1;
    i64 m_hi = static_cast<i64>(std::floor(B));
    for (i64 m = m_lo; m <= m_hi; ++m) {
        double md = static_cast<double>(m);
        double g = G(md);
        double f = F(md);
        std::complex<double> t = e_of(f - std::floor(f));
        re.add(g * t.real());
        im.add(g * t.imag());
    }
    return {re.value(), im.value()};
}

std::complex<double> dyadic_block_sum(int ell, i64 h, double u, int j) {
    if (ell < 1) throw DomainError("dyadic_block_sum: ell must be >= 1");
    if (h < 1) throw DomainError("dyadic_block_sum: h must be >= 1");
    if (u < 1.0) throw DomainError("dyadic_block_sum: u must be >= 1");
    if (j < 0) throw DomainError("dyadic_block_sum: j must be >= 0");
    double Mj = std::ldexp(u, -j);
    double Mj1 = std::ldexp(u, -(j + 1));
    i64 m_lo = static_cast<i64>(std::floor(Mj1)) + 1;
    i64 m_hi = static_cast<i64>(std::floor(Mj));
    dd usq = two_prod(u, u);
    KahanSum re, im;
    for (i64 m = m_lo; m <= m_hi; ++m) {
        double md = static_cast<double>(m);
        double amp = md * ipow((u - md) * (u + md), ell - 1);
        // F(m) = -h (u^2 - m^2) / (2m), fractional part in double-double
        dd num = dd_add_d(usq, -md * md);
        dd f = dd_mul_d(dd_div_d(num, 2.0 * md),
                        -static_cast<double>(h));
        std::complex<double> t = e_of_dd(f);
        re.add(amp * t.real());
        im.add(amp * t.imag());
    }
    return {re.value(), im.value()};
}

double stationary_point(i64 h, double u, i64 k) {
    if (2 * k <= h)
        throw StationaryPointOutOfRange(
            "stationary_point: need 2k > h for a stationary point");
    return u * std::sqrt(static_cast<double>(h) /
                         static_cast<double>(2 * k - h));
}

TransformReport vdc_transform(int ell, i64 h, double u, int j) {
    if (ell < 1) throw DomainError("vdc_transform: ell must be >= 1");
    if (h < 1) throw DomainError("vdc_transform: h must be >= 1");
    if (u < 2.0) throw DomainError("vdc_transform: u must be >= 2");
    int J_u = dyadic_level_count(u);
    if (j < 0 || j > J_u)
        throw DomainError("vdc_transform: block level j exceeds the dyadic "
                          "range for this u");
    TransformReport rep;
    rep.direct = dyadic_block_sum(ell, h, u, j);

    // Frequency window [F'(M_j), F'(M_{j+1})) resolved exactly:
    // F'(M_j) = h (2^(2j-1) + 1/2), so k >= ceil(h (2^(2j) + 1) / 2) and
    // 2k < h (2^(2j+2) + 1).
    i64 lo_num = h * ((static_cast<i64>(1) << (2 * j)) + 1);
    i64 hi_num = h * ((static_cast<i64>(1) << (2 * j + 2)) + 1);
    rep.k_lo = (lo_num + 1) / 2;
    rep.k_hi = (hi_num - 1) / 2;

    double Mj = std::ldexp(u, -j);
    rep.X = Mj;
    rep.Y = Mj * Mj * Mj / (static_cast<double>(h) * u * u);
    rep.Z = Mj * ipow(u, 2 * ell - 2);
    // The budget's log takes the length of the frequency interval itself,
    // F'(M_{j+1}) - F'(M_j) = (hi_num - lo_num) / 2 = 3 h 4^j / 2, which can
    // differ from the integer count k_hi - k_lo + 1 by up to one.
    double len_image = 0.5 * static_cast<double>(hi_num - lo_num);
    rep.bound = rep.Z * (std::sqrt(rep.Y) + std::log(2.0 + len_image));

    // e(-1/8) sum over the window of the stationary-phase main terms.
    KahanSum re, im;
    double upow = ipow(u, 2 * ell) / std::sqrt(u);  // u^(2l - 1/2)
    for (i64 k = rep.k_lo; k <= rep.k_hi; ++k) {
        if (2 * k - 2 * h == 0 && ell > 1) continue;  // zero amplitude
        double tk = static_cast<double>(2 * k - h);
        double amp = std::pow(static_cast<double>(h), 0.75) * upow *
                     ipow(static_cast<double>(2 * k - 2 * h), ell - 1) /
                     std::pow(tk, ell + 0.25);
        i64 n = h * (2 * k - h);
        dd phase = dd_mul_d(dd_sqrt(dd{static_cast<double>(n), 0.0}), -u);
        std::complex<double> t = e_of_dd(phase);
        re.add(amp * t.real());
        im.add(amp * t.imag());
    }
    std::complex<double> rot{std::cos(kPi / 4.0), -std::sin(kPi / 4.0)};
    rep.transformed = rot * std::complex<double>{re.value(), im.value()};
    return rep;
}

// ---------------------------------------------------------------------------
// Aggregated pair sum.
// ---------------------------------------------------------------------------

namespace {

double pair_weight(int ell, i64 h, i64 k) {
    double tk = static_cast<double>(2 * k - h);
    return std::pow(static_cast<double>(h), 0.75) *
           ipow(static_cast<double>(2 * k - 2 * h), ell - 1) /
           std::pow(tk, ell + 0.25);
}

// sin / cos of 2 pi u sqrt(n) + pi/4 with double-double phase reduction.
void phase_trig(double u, i64 n, double& s, double& c) {
    dd root = dd_sqrt(dd{static_cast<double>(n), 0.0});
    dd f = dd_fract(dd_mul_d(root, u));
    double a = 2.0 * kPi * (f.hi + f.lo) + kPi / 4.0;
    s = std::sin(a);
    c = std::cos(a);
}

}  // namespace

double pair_phase_sum_over(int ell, double u, const VaalerApproximant& a,
                           const std::vector<std::pair<i64, i64>>& pairs) {
    if (ell < 1 || ell % 2 != 0)
        throw OddEllUnsupported("pair_phase_sum: ell must be even");
    KahanSum sum;
    for (const auto& [h, k] : pairs) {
        if (h < 1 || k <= h)
            throw DomainError("pair_phase_sum: pairs need 1 <= h < k");
        if (h > a.H)
            throw DomainError("pair_phase_sum: h exceeds approximant degree");
        double w = pair_weight(ell, h, k);
        double s, c;
        phase_trig(u, h * (2 * k - h), s, c);
        sum.add(w * (a.alpha[static_cast<std::size_t>(h - 1)] * s -
                     a.beta[static_cast<std::size_t>(h - 1)] * c));
    }
    return sum.value();
}

double pair_phase_sum(int ell, double u, double U,
                      const VaalerApproximant& a) {
    if (ell < 1 || ell % 2 != 0)
        throw OddEllUnsupported("pair_phase_sum: ell must be even");
    if (U < 1.0) return 0.0;
    PairDomain dom = pair_domain(U);
    if (a.H != static_cast<int>(dom.h_max))
        throw DomainError("pair_phase_sum: approximant degree must equal "
                          "floor(U)");
    KahanSum sum;
    for (i64 h = 1; h <= dom.h_max; ++h) {
        double alpha = a.alpha[static_cast<std::size_t>(h - 1)];
        double beta = a.beta[static_cast<std::size_t>(h - 1)];
        i64 kmax = dom.k_max(h);
        for (i64 k = h + 1; k <= kmax; ++k) {
            double w = pair_weight(ell, h, k);
            double s, c;
            phase_trig(u, h * (2 * k - h), s, c);
            sum.add(w * (alpha * s - beta * c));
        }
    }
    return sum.value();
}

std::vector<PhasePair> phase_pair_table(int ell, double U,
                                        const VaalerApproximant& a) {
    if (ell < 1 || ell % 2 != 0)
        throw OddEllUnsupported("phase_pair_table: ell must be even");
    PairDomain dom = pair_domain(U);
    if (U < 1.0) return {};
    if (a.H != static_cast<int>(dom.h_max))
        throw DomainError("phase_pair_table: approximant degree must equal "
                          "floor(U)");
    struct Raw {
        i64 n;
        double wa, wb;
    };
    std::vector<Raw> raw;
    for (i64 h = 1; h <= dom.h_max; ++h) {
        double alpha = a.alpha[static_cast<std::size_t>(h - 1)];
        double beta = a.beta[static_cast<std::size_t>(h - 1)];
        i64 kmax = dom.k_max(h);
        for (i64 k = h + 1; k <= kmax; ++k) {
            double w = pair_weight(ell, h, k);
            raw.push_back({h * (2 * k - h), w * alpha, w * beta});
        }
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Raw& x, const Raw& y) { return x.n < y.n; });
    std::vector<PhasePair> out;
    out.reserve(raw.size());
    for (const Raw& r : raw) {
        if (!out.empty() && out.back().n == r.n) {
            out.back().alpha_weight += r.wa;
            out.back().beta_weight += r.wb;
        } else {
            out.push_back({r.n, r.wa, r.wb});
        }
    }
    return out;
}

double pair_phase_sum_from_table(const std::vector<PhasePair>& table,
                                 double u) {
    KahanSum sum;
    for (const PhasePair& p : table) {
        double s, c;
        phase_trig(u, p.n, s, c);
        sum.add(p.alpha_weight * s - p.beta_weight * c);
    }
    return sum.value();
}

}  // namespace weyllab
