#include "weyllab/smoothing.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "weyllab/ddouble.hpp"
#include "weyllab/expsum.hpp"
#include "weyllab/vaaler.hpp"

namespace weyllab {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

}  // namespace

double fejer_kernel(double T, double v) {
    if (T <= 0.0) throw DomainError("fejer_kernel: T must be > 0");
    double s = sinc(kPi * T * v);
    return T * s * s;
}

// ---------------------------------------------------------------------------
// Adaptive check of the kernel's oscillatory integral.
// ---------------------------------------------------------------------------

namespace {

using cplx = std::complex<double>;

struct SimpsonState {
    double T, Q, delta;
    int evals = 0;

    cplx f(double v) const {
        double a = 2.0 * kPi * (Q * v + delta);
        return fejer_kernel(T, v) * cplx{std::cos(a), std::sin(a)};
    }
};

cplx adaptive_simpson(SimpsonState& st, double a, double b, cplx fa, cplx fm,
                      cplx fb, cplx whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    cplx flm = st.f(lm), frm = st.f(rm);
    st.evals += 2;
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    cplx diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    if (depth <= 0)
        throw QuadratureFailure(
            "fejer_transform_check: adaptive refinement hit the depth cap "
            "before reaching the error target");
    return adaptive_simpson(st, a, m, fa, flm, fm, left, 0.5 * tol,
                            depth - 1) +
           adaptive_simpson(st, m, b, fm, frm, fb, right, 0.5 * tol,
                            depth - 1);
}

cplx integrate_panel(SimpsonState& st, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    cplx fa = st.f(a), fm = st.f(m), fb = st.f(b);
    st.evals += 3;
    cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(st, a, b, fa, fm, fb, whole, tol, 28);
}

}  // namespace

FejerCheck fejer_transform_check(double T, double Q, double delta) {
    if (T <= 0.0) throw DomainError("fejer_transform_check: T must be > 0");
    if (Q < 0.0) throw DomainError("fejer_transform_check: Q must be >= 0");
    SimpsonState st{T, Q, delta};
    // Pre-split so no oscillation or kernel lobe spans more than a piece.
    int pieces = 16;
    double scale = std::max(T, Q);
    while (pieces < 4.0 * scale && pieces < (1 << 16)) pieces *= 2;
    cplx total{0.0, 0.0};
    double tol = 1e-12 / static_cast<double>(pieces);
    for (int p = 0; p < pieces; ++p) {
        double a = -1.0 + 2.0 * static_cast<double>(p) / pieces;
        double b = -1.0 + 2.0 * static_cast<double>(p + 1) / pieces;
        total += integrate_panel(st, a, b, tol);
    }
    FejerCheck out;
    out.numeric = total;
    double tri = std::max(1.0 - Q / T, 0.0);
    double a = 2.0 * kPi * delta;
    out.closed = tri * cplx{std::cos(a), std::sin(a)};
    out.defect = std::abs(out.numeric - out.closed);
    return out;
}

// ---------------------------------------------------------------------------
// Composite Gauss quadrature of the smoothed pair sum.
// ---------------------------------------------------------------------------

namespace {

constexpr int kGaussOrder = 24;

struct GaussRule {
    double x[kGaussOrder];
    double w[kGaussOrder];
};

// Gauss-Legendre nodes by Newton iteration on P_n; deterministic and good
// to machine precision.
GaussRule gauss_rule() {
    GaussRule r;
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

// Kaiser-windowed sinc interpolation kernel, half-width W samples, for a
// grid oversampled 2x relative to the spectrum of the sampled function.
constexpr int kTaps = 16;            // half-width W
const double kBeta = kPi * kTaps / 2.0;

double bessel_i0(double x) {
    // Power series; converges quickly for the x <= 26 used here.
    double sum = 1.0, term = 1.0;
    double x2 = 0.25 * x * x;
    for (int k = 1; k < 200; ++k) {
        term *= x2 / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double kaiser_sinc(double x) {
    double t = x / kTaps;
    if (t <= -1.0 || t >= 1.0) return 0.0;
    static const double i0b = bessel_i0(kBeta);
    return sinc(kPi * x) * bessel_i0(kBeta * std::sqrt(1.0 - t * t)) / i0b;
}

}  // namespace

double smoothed_pair_sum_numeric(int ell, double T, double U, int refine) {
    if (T <= 0.0) throw DomainError("smoothed_pair_sum_numeric: T > 0");
    if (U < 1.0) return 0.0;
    VaalerApproximant approx =
        vaaler_approximant(static_cast<int>(std::floor(U)));
    std::vector<PhasePair> table = phase_pair_table(ell, U, approx);
    if (table.empty()) return 0.0;

    double q_max = std::sqrt(static_cast<double>(table.back().n));
    double cycles = 2.0 * q_max;  // oscillations of e(q_max v) over [-1,1]

    // Baseline ~2k nodes; doubled until each panel sees at most two cycles
    // of the fastest phase (>= 12 nodes per cycle at order 24).
    int panels = 86;
    while (cycles / panels > 2.0) panels *= 2;
    panels <<= refine;

    GaussRule rule = gauss_rule();

    // Quadrature nodes on (0, 1]; the v < 0 half is folded in by symmetry
    // (the node set and the kernel are both even, making the phase-table
    // transform purely real).
    std::vector<double> vpos, wpos;
    vpos.reserve(static_cast<std::size_t>(panels) * kGaussOrder / 2);
    wpos.reserve(vpos.capacity());
    double hw = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        double c = -1.0 + (2.0 * p + 1.0) * hw;
        for (int g = 0; g < kGaussOrder; ++g) {
            double v = c + hw * rule.x[g];
            if (v <= 0.0) continue;
            vpos.push_back(v);
            wpos.push_back(hw * rule.w[g] * fejer_kernel(T, v));
        }
    }

    // Sampled transform Q(q) = sum_j 2 w_j cos(2 pi q v_j) on a uniform
    // q-grid at twice the Nyquist density of the v-support.
    const double dq = 0.25;
    std::size_t ngrid =
        static_cast<std::size_t>(std::ceil(q_max / dq)) + kTaps + 8;
    std::vector<double> grid(ngrid, 0.0);
    for (std::size_t j = 0; j < vpos.size(); ++j) {
        double ang = 2.0 * kPi * dq * vpos[j];
        double cr = std::cos(ang), ci = std::sin(ang);
        double re = 2.0 * wpos[j], im = 0.0;
        for (std::size_t i = 0; i < ngrid; ++i) {
            grid[i] += re;
            double nre = re * cr - im * ci;
            im = re * ci + im * cr;
            re = nre;
        }
    }

    // Evaluate per distinct phase integer: interpolate Q(sqrt(n)) from the
    // grid (Kaiser-windowed sinc; the function is band-limited to the
    // v-support so 2x oversampling leaves ~1e-11 interpolation error) and
    // apply the outer oscillation at u = U.
    KahanSum total;
    for (const PhasePair& p : table) {
        dd root = dd_sqrt(dd{static_cast<double>(p.n), 0.0});
        double q = root.hi;
        double t = q / dq;
        i64 i0 = static_cast<i64>(std::floor(t));
        double qv = 0.0;
        for (i64 i = i0 - kTaps + 1; i <= i0 + kTaps; ++i) {
            std::size_t idx = static_cast<std::size_t>(i < 0 ? -i : i);
            if (idx >= ngrid) continue;
            qv += grid[idx] * kaiser_sinc(t - static_cast<double>(i));
        }
        dd f = dd_fract(dd_mul_d(root, U));
        double ang = 2.0 * kPi * (f.hi + f.lo) + kPi / 4.0;
        total.add(qv * (p.alpha_weight * std::sin(ang) -
                        p.beta_weight * std::cos(ang)));
    }
    return total.value();
}

TruncatedSmoothedSum smoothed_pair_sum_truncated(int ell, double T,
                                                 double U) {
    if (T <= 0.0) throw DomainError("smoothed_pair_sum_truncated: T > 0");
    TruncatedSmoothedSum out;
    if (U < 1.0) return out;
    VaalerApproximant approx =
        vaaler_approximant(static_cast<int>(std::floor(U)));
    std::vector<PhasePair> table = phase_pair_table(ell, U, approx);
    double tsq = T * T;
    KahanSum value;
    for (const PhasePair& p : table) {
        double n = static_cast<double>(p.n);
        if (n > tsq) break;  // table is sorted by n
        dd root = dd_sqrt(dd{n, 0.0});
        double tri = std::max(1.0 - root.hi / T, 0.0);
        dd f = dd_fract(dd_mul_d(root, U));
        double ang = 2.0 * kPi * (f.hi + f.lo) + kPi / 4.0;
        value.add(tri * (p.alpha_weight * std::sin(ang) -
                         p.beta_weight * std::cos(ang)));
    }
    out.value = value.value();

    // Defect budget: per-pair O(1/sqrt(n)) loss against the closed kernel
    // transform, summed over the whole pair domain.
    PairDomain dom = pair_domain(U);
    KahanSum budget;
    for (i64 h = 1; h <= dom.h_max; ++h) {
        i64 kmax = dom.k_max(h);
        for (i64 k = h + 1; k <= kmax; ++k) {
            double diff = static_cast<double>(2 * k - 2 * h);
            double tk = static_cast<double>(2 * k - h);
            double term = std::pow(static_cast<double>(h), -0.75);
            for (int i = 1; i < ell; ++i) term *= diff;
            term /= std::pow(tk, ell + 0.75);
            budget.add(term);
        }
    }
    out.tail_budget = budget.value();
    return out;
}

}  // namespace weyllab
