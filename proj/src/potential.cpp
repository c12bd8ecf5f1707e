#include "gldpc/potential.hpp"

#include <cmath>
#include <ostream>

#include "gldpc/highrate.hpp"
#include "gldpc/numerics.hpp"

namespace gldpc {

namespace {

constexpr double kQuadTol = 1e-12;

// min of U over [0, xmax] where U is the cumulative integral of `drift`
// (U(0) = 0): composite Simpson on a uniform grid, then golden refinement of
// the best bracket. Returns {min value, argmin}.
template <typename F>
std::pair<double, double> min_cumulative(F&& drift, double xmax, int intervals) {
    const double h = xmax / intervals;
    double u = 0.0, best_u = 0.0, best_x = 0.0;
    int best_i = 0;
    double f_lo = drift(0.0);
    std::vector<double> node_u(size_t(intervals) + 1, 0.0);
    for (int i = 0; i < intervals; ++i) {
        double a = i * h, b = (i + 1) * h;
        double f_hi = drift(b);
        u += h / 6.0 * (f_lo + 4.0 * drift(0.5 * (a + b)) + f_hi);
        node_u[size_t(i) + 1] = u;
        if (u < best_u) {
            best_u = u;
            best_x = b;
            best_i = i + 1;
        }
        f_lo = f_hi;
    }
    // refine inside the two intervals around the best node
    double lo = std::max(0.0, (best_i - 1) * h);
    double hi = std::min(xmax, (best_i + 1) * h);
    double base = node_u[size_t(std::max(best_i - 1, 0))];
    auto u_at = [&](double x) {
        return base + adaptive_simpson(drift, lo, x, kQuadTol);
    };
    double xr = golden_min(u_at, lo, hi, 1e-10);
    double ur = u_at(xr);
    if (ur < best_u) {
        best_u = ur;
        best_x = xr;
    }
    return {best_u, best_x};
}

} // namespace

double potential_value(double x, double p, int n, int t) {
    if (x < 0.0 || x > 1.0) throw config_error("potential_value: x outside [0,1]");
    FnEvaluator fhat(idealized_table(n, t), p);
    return adaptive_simpson([&](double z) { return z - fhat(z); }, 0.0, x, kQuadTol);
}

double scaled_potential_value(double lambda, double rho, int t) {
    if (lambda < 0.0 || rho < 0.0)
        throw config_error("scaled_potential_value: negative argument");
    return adaptive_simpson(
        [&](double z) { return z - rho * poisson_tail_phi(z, t - 1); }, 0.0, lambda,
        kQuadTol);
}

ThresholdResult potential_threshold_finite(int n, int t, double tol) {
    if (tol <= 0.0) throw config_error("potential_threshold_finite: tol must be > 0");
    auto succeeds = [&](double p) {
        FnEvaluator fhat(idealized_table(n, t), p);
        auto [umin, xmin] = min_cumulative([&](double z) { return z - fhat(z); }, 1.0, 2000);
        (void)xmin;
        return umin >= -1e-12;
    };
    double lo = 0.5 * t / n, hi = 2.2 * t / n;
    ThresholdResult res = bisect_threshold(succeeds, lo, std::min(hi, 1.0), tol);
    res.scaled = res.threshold * n;
    return res;
}

ThresholdResult scaled_potential_threshold(int t, double tol) {
    if (t < 2) throw config_error("scaled_potential_threshold: t must be >= 2");
    if (tol <= 0.0) throw config_error("scaled_potential_threshold: tol must be > 0");
    const double cap = 4.0 * t;
    auto succeeds = [&](double rho) {
        auto [umin, argmin] = min_cumulative(
            [&](double z) { return z - rho * poisson_tail_phi(z, t - 1); }, cap, 4000);
        if (argmin > cap - 1e-6 && umin < 0.0)
            throw numerical_error("scaled_potential_threshold: minimizer hit the cap");
        return umin >= -1e-12;
    };
    ThresholdResult res = bisect_threshold(succeeds, double(t), 2.0 * t, tol);
    res.scaled = res.threshold;
    return res;
}

void write_potential_csv(double param, int t, int n, double max_state, int points,
                         std::ostream& os) {
    os << "state,U\n";
    if (n > 0) {
        FnEvaluator fhat(idealized_table(n, t), param);
        double u = 0.0, h = max_state / points;
        double f_lo = 0.0 - fhat(0.0);
        os << 0.0 << "," << 0.0 << "\n";
        for (int i = 0; i < points; ++i) {
            double b = (i + 1) * h;
            double mid = b - 0.5 * h;
            double f_hi = b - fhat(b);
            u += h / 6.0 * (f_lo + 4.0 * (mid - fhat(mid)) + f_hi);
            os << b << "," << u << "\n";
            f_lo = f_hi;
        }
    } else {
        double u = 0.0, h = max_state / points;
        auto drift = [&](double z) { return z - param * poisson_tail_phi(z, t - 1); };
        double f_lo = drift(0.0);
        os << 0.0 << "," << 0.0 << "\n";
        for (int i = 0; i < points; ++i) {
            double b = (i + 1) * h;
            double f_hi = drift(b);
            u += h / 6.0 * (f_lo + 4.0 * drift(b - 0.5 * h) + f_hi);
            os << b << "," << u << "\n";
            f_lo = f_hi;
        }
    }
}

} // namespace gldpc
