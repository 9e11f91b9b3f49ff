#pragma once
// Minimal double-double arithmetic (Dekker / Knuth error-free transforms).
// Used where a plain double would lose the fractional part of a large
// argument: sawtooth evaluation at w ~ u^2 and phase reduction of u*sqrt(n).
//
// Error budget: each primitive is accurate to ~1 ulp of the 106-bit result,
// so a value of magnitude |w| carries absolute error ~ |w| * 2^-104.  For
// w up to 5e9 (u = 1e5) the fractional part is still good to ~6e-22, far
// below the 1e-9 relative targets downstream.

#include <cmath>

namespace weyllab {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    double err = b - (s - a);
    return {s, err};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd dd_add_d(dd a, double b) {
    dd s = two_sum(a.hi, b);
    double lo = s.lo + a.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline dd dd_mul_d(dd a, double b) {
    dd p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline dd dd_div_d(dd a, double b) {
    double q0 = a.hi / b;
    dd p = two_prod(q0, b);
    double r = (a.hi - p.hi) - p.lo + a.lo;
    double q1 = r / b;
    return quick_two_sum(q0, q1);
}

inline dd dd_div(dd a, dd b) {
    double q0 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul_d(b, q0));
    double q1 = r.hi / b.hi;
    r = dd_sub(r, dd_mul_d(b, q1));
    double q2 = r.hi / b.hi;
    return dd_add_d(quick_two_sum(q0, q1), q2);
}

// sqrt via one Newton step on the double estimate (Karp/Markstein form).
inline dd dd_sqrt(dd a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double x = 1.0 / std::sqrt(a.hi);
    double y = a.hi * x;
    dd y2 = two_prod(y, y);
    double diff = (a.hi - y2.hi) - y2.lo + a.lo;
    return quick_two_sum(y, diff * (0.5 * x));
}

inline dd dd_floor(dd a) {
    double f = std::floor(a.hi);
    if (f != a.hi) return {f, 0.0};
    return quick_two_sum(f, std::floor(a.lo));
}

// Fractional part in [0,1): a - floor(a).
inline dd dd_fract(dd a) {
    dd f = dd_sub(a, dd_floor(a));
    if (f.hi < 0.0) f = dd_add_d(f, 1.0);
    if (f.hi >= 1.0) f = dd_add_d(f, -1.0);
    return f;
}

// Compensated (Neumaier) running sum for plain doubles.
struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace weyllab
