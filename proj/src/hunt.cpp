#include "weyllab/hunt.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "weyllab/base.hpp"
#include "weyllab/ddouble.hpp"
#include "weyllab/parallel.hpp"

namespace weyllab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<ScanRecord> extreme_scan(const HeisenbergManifold& m,
                                     double u_min, double u_max, double step,
                                     int workers) {
    if (!(u_min > 1.0))
        throw DomainError("extreme_scan: u_min must exceed 1 (log normalization)");
    if (!(u_max >= u_min)) throw DomainError("extreme_scan: empty range");
    if (!(step > 0.0)) throw DomainError("extreme_scan: step must be positive");

    // Grid size fixed up front so the work division is deterministic.
    const std::size_t count =
        static_cast<std::size_t>(std::floor((u_max - u_min) / step)) + 1;
    const double half_power = 2.0 * m.ell - 0.5;

    return parallel_map<ScanRecord>(
        count,
        [&](std::size_t i) {
            ScanRecord rec;
            rec.u = u_min + static_cast<double>(i) * step;
            rec.t = 2.0 * kPi * rec.u * rec.u;
            rec.E = oscillatory_remainder(m, rec.u);
            rec.norm1 = rec.E / std::pow(rec.u, half_power);
            rec.norm2 = rec.norm1 / std::pow(std::log(rec.u), 0.25);
            return rec;
        },
        workers);
}

FitResult exponent_fit(const std::vector<std::pair<double, double>>& xy) {
    std::vector<std::pair<double, double>> logs;
    logs.reserve(xy.size());
    std::set<double> distinct;
    for (const auto& [x, y] : xy) {
        if (!(x > 0.0) || !(y > 0.0)) continue;  // log-log: skip non-positive
        logs.emplace_back(std::log(x), std::log(y));
        distinct.insert(logs.back().first);
    }
    if (distinct.size() < 2)
        throw DegenerateInput("exponent_fit: need at least 2 distinct positive x");

    KahanSum sx, sy, sxx, sxy;
    for (const auto& [lx, ly] : logs) {
        sx.add(lx);
        sy.add(ly);
        sxx.add(lx * lx);
        sxy.add(lx * ly);
    }
    const double n = static_cast<double>(logs.size());
    const double det = n * sxx.value() - sx.value() * sx.value();
    FitResult fit;
    fit.exponent = (n * sxy.value() - sx.value() * sy.value()) / det;
    fit.log_const = (sy.value() - fit.exponent * sx.value()) / n;

    KahanSum rss;
    for (const auto& [lx, ly] : logs) {
        const double r = ly - (fit.log_const + fit.exponent * lx);
        rss.add(r * r);
    }
    fit.residual = std::sqrt(rss.value() / n);
    return fit;
}

MeanSquareResult mean_square_profile(const std::function<double(double)>& R_of_t,
                                     double t_lo, double t_max,
                                     int n_checkpoints, double u_step,
                                     int workers) {
    if (!(t_max > t_lo) || !(t_lo > 0.0))
        throw DomainError("mean_square_profile: need 0 < t_lo < t_max");
    if (n_checkpoints < 2)
        throw DomainError("mean_square_profile: need >= 2 checkpoints");
    if (!(u_step > 0.0))
        throw DomainError("mean_square_profile: step must be positive");

    // Substitute t = 2 pi u^2: integral of R(t)^2 dt becomes
    // integral of R(2 pi u^2)^2 * 4 pi u du.  Grid from u = 1 upward.
    const double u_max = std::sqrt(t_max / (2.0 * kPi));
    const std::size_t nodes =
        static_cast<std::size_t>(std::floor((u_max - 1.0) / u_step)) + 1;
    if (nodes < 2)
        throw DomainError("mean_square_profile: grid has fewer than 2 nodes");

    std::vector<double> f = parallel_map<double>(
        nodes,
        [&](std::size_t i) {
            const double u = 1.0 + static_cast<double>(i) * u_step;
            const double R = R_of_t(2.0 * kPi * u * u);
            return R * R * 4.0 * kPi * u;
        },
        workers);

    bool any_signal = false;
    for (double v : f)
        if (std::fabs(v) > 1e-30) { any_signal = true; break; }

    MeanSquareResult out;
    if (!any_signal) {
        out.no_signal = true;
        return out;
    }

    // Cumulative trapezoid over the u-grid, then linear interpolation of the
    // running integral at each geometric checkpoint T_i.
    std::vector<double> cum(nodes, 0.0);
    KahanSum acc;
    for (std::size_t i = 1; i < nodes; ++i) {
        acc.add(0.5 * (f[i - 1] + f[i]) * u_step);
        cum[i] = acc.value();
    }

    const double ratio = t_max / t_lo;
    for (int i = 0; i < n_checkpoints; ++i) {
        const double T =
            t_lo * std::pow(ratio, static_cast<double>(i) /
                                       static_cast<double>(n_checkpoints - 1));
        const double uT = std::sqrt(T / (2.0 * kPi));
        if (uT <= 1.0) {
            out.checkpoints.emplace_back(T, 0.0);
            continue;
        }
        double pos = (uT - 1.0) / u_step;
        std::size_t k = static_cast<std::size_t>(pos);
        if (k >= nodes - 1) k = nodes - 2;
        const double frac = pos - static_cast<double>(k);
        // Partial panel: trapezoid piece from node k to uT.
        const double f_at =
            f[k] + (f[k + 1] - f[k]) * frac;  // linear in the integrand
        const double partial = 0.5 * (f[k] + f_at) * frac * u_step;
        out.checkpoints.emplace_back(T, cum[k] + partial);
    }

    std::vector<std::pair<double, double>> pos_pts;
    for (const auto& [T, I] : out.checkpoints)
        if (I > 0.0) pos_pts.emplace_back(T, I);
    if (pos_pts.size() < 2) {
        out.no_signal = true;
        return out;
    }
    out.fit = exponent_fit(pos_pts);
    return out;
}

MeanSquareResult mean_square(const HeisenbergManifold& m, double t_lo,
                             double t_max, int n_checkpoints, double u_step,
                             int workers) {
    // Undo the normalization baked into oscillatory_remainder: that function
    // returns E with the 2^(l-2) (l-1)! / prod r factor folded in, so the raw
    // oscillation R(t) carries the reciprocal factor.
    const double rp = static_cast<double>(m.r_product());
    double scale;
    if (m.ell == 1) {
        scale = 2.0 * rp;  // pref = 1/(2R) at l = 1
    } else {
        double fact = 1.0;
        for (int i = 2; i < m.ell; ++i) fact *= static_cast<double>(i);
        scale = rp / (std::pow(2.0, m.ell - 2) * fact);
    }
    auto R = [&](double t) {
        const double u = std::sqrt(t / (2.0 * kPi));
        if (u <= 1.0) return 0.0;
        return oscillatory_remainder(m, u) * scale;
    };
    return mean_square_profile(R, t_lo, t_max, n_checkpoints, u_step, workers);
}

}  // namespace weyllab
