#include "weyllab/diophantine.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "weyllab/ddouble.hpp"

namespace weyllab {

double nearest_int_distance(double x) {
    double f = x - std::floor(x);
    return std::min(f, 1.0 - f);
}

namespace {

// ||U sqrt(n)|| with the root and product carried in double-double.
double root_multiple_distance(i64 U, i64 n) {
    dd root = dd_sqrt(dd{static_cast<double>(n), 0.0});
    dd f = dd_fract(dd_mul_d(root, static_cast<double>(U)));
    double fr = f.hi + f.lo;
    return std::min(fr, 1.0 - fr);
}

}  // namespace

std::vector<ConstraintTarget> constraint_targets(double T) {
    if (T <= 0.0) throw DomainError("constraint_targets: T must be > 0");
    i64 nmax = static_cast<i64>(std::floor(T * T));
    std::vector<ConstraintTarget> out;
    for (i64 n = 2; n <= nmax; ++n) {
        i64 s = isqrt64(n);
        if (s * s == n) continue;  // exact root: no constraint needed
        ConstraintTarget best{0, 0, 0};
        for (i64 h = 1; h * h < n; ++h) {
            if (n % h != 0) continue;
            i64 m = n / h;
            if ((m - h) % 2 != 0) continue;
            best = {n, h, (m + h) / 2};
            break;  // keep the representative with the smallest h
        }
        if (best.n != 0) out.push_back(best);
    }
    return out;
}

DirichletCertificate dirichlet_search(double T, i64 budget) {
    if (T <= 0.0) throw DomainError("dirichlet_search: T must be > 0");
    if (budget < 1) throw DomainError("dirichlet_search: budget must be >= 1");
    DirichletCertificate cert;
    cert.T = T;
    cert.targets = constraint_targets(T);
    // Analytic ceiling T^2 16^(T^2) in log space (it overflows quickly).
    double log_cap = 2.0 * std::log(T) + T * T * std::log(16.0);
    i64 U0 = static_cast<i64>(std::ceil(T * T));
    if (U0 < 1) U0 = 1;
    double best = 1.0;
    for (i64 tried = 0; tried < budget; ++tried) {
        i64 U = U0 + tried;
        double worst = 0.0;
        for (const ConstraintTarget& t : cert.targets)
            worst = std::max(worst, root_multiple_distance(U, t.n));
        best = std::min(best, worst);
        if (worst <= 1.0 / 16.0) {
            cert.U = U;
            cert.max_distance = worst;
            cert.distances.reserve(cert.targets.size());
            for (const ConstraintTarget& t : cert.targets)
                cert.distances.push_back(root_multiple_distance(U, t.n));
            cert.bound_ok = std::log(static_cast<double>(U)) <= log_cap + 1e-12;
            return cert;
        }
        if (std::log(static_cast<double>(U)) > log_cap + 1e-12)
            throw BudgetExhausted(
                "dirichlet_search: passed the analytic ceiling without a "
                "simultaneous approximation",
                best);
    }
    throw BudgetExhausted("dirichlet_search: candidate budget exhausted",
                          best);
}

bool verify_certificate(const DirichletCertificate& c) {
    if (c.U < 1) return false;
    if (c.distances.size() != c.targets.size()) return false;
    for (std::size_t i = 0; i < c.targets.size(); ++i) {
        const ConstraintTarget& t = c.targets[i];
        if (t.h < 1 || t.k <= t.h) return false;
        if (t.h * (2 * t.k - t.h) != t.n) return false;
        double d = root_multiple_distance(c.U, t.n);
        if (d > 1.0 / 16.0 + 1e-15) return false;
        if (std::abs(d - c.distances[i]) > 1e-12) return false;
    }
    return true;
}

std::string serialize_certificate(const DirichletCertificate& c) {
    std::ostringstream os;
    char buf[64];
    os << "dirichlet-certificate v1\n";
    std::snprintf(buf, sizeof buf, "%.17g", c.T);
    os << "T " << buf << "\n";
    os << "U " << c.U << "\n";
    os << "targets " << c.targets.size() << "\n";
    for (std::size_t i = 0; i < c.targets.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", c.distances[i]);
        os << c.targets[i].n << " " << c.targets[i].h << " " << c.targets[i].k
           << " " << buf << "\n";
    }
    return os.str();
}

DirichletCertificate parse_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "dirichlet-certificate v1")
        throw DomainError("parse_certificate: bad header");
    DirichletCertificate c;
    std::string tag;
    std::size_t count = 0;
    if (!(is >> tag >> c.T) || tag != "T")
        throw DomainError("parse_certificate: missing T");
    if (!(is >> tag >> c.U) || tag != "U")
        throw DomainError("parse_certificate: missing U");
    if (!(is >> tag >> count) || tag != "targets")
        throw DomainError("parse_certificate: missing target count");
    for (std::size_t i = 0; i < count; ++i) {
        ConstraintTarget t;
        double d;
        if (!(is >> t.n >> t.h >> t.k >> d))
            throw DomainError("parse_certificate: truncated target list");
        c.targets.push_back(t);
        c.distances.push_back(d);
        c.max_distance = std::max(c.max_distance, d);
    }
    double log_cap = 2.0 * std::log(c.T) + c.T * c.T * std::log(16.0);
    c.bound_ok = c.U >= 1 &&
                 std::log(static_cast<double>(c.U)) <= log_cap + 1e-12;
    return c;
}

}  // namespace weyllab
