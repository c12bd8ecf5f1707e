#include "gldpc/de.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gldpc/numerics.hpp"

namespace gldpc {

FnEvaluator::FnEvaluator(const MiscorrectionTable& table, double p)
    : n_(table.n), coef_(size_t(table.n)), lbinom_(size_t(table.n)) {
    if (p < 0.0 || p > 1.0) throw config_error("FnEvaluator: p outside [0,1]");
    for (int i = 0; i < n_; ++i) {
        coef_[size_t(i)] = p * table.P[size_t(i)] + (1.0 - p) * table.Q[size_t(i)];
        lbinom_[size_t(i)] = lchoose(n_ - 1, i);
    }
}

double FnEvaluator::operator()(double x) const {
    if (x <= 0.0) return coef_[0];
    if (x >= 1.0) return coef_[size_t(n_ - 1)];
    const int nm1 = n_ - 1;
    const double lx = std::log(x);
    const double l1x = std::log1p(-x);
    auto lterm = [&](int i) { return lbinom_[size_t(i)] + i * lx + (nm1 - i) * l1x; };

    int mode = std::clamp(int(double(n_) * x), 0, nm1);
    const double lmax = lterm(mode);
    const double cutoff = lmax - 46.0; // ~1e-20 relative

    KahanSum acc;
    for (int i = mode; i >= 0; --i) {
        double lt = lterm(i);
        if (lt < cutoff) break;
        acc.add(std::exp(lt) * coef_[size_t(i)]);
    }
    for (int i = mode + 1; i < n_; ++i) {
        double lt = lterm(i);
        if (lt < cutoff) break;
        acc.add(std::exp(lt) * coef_[size_t(i)]);
    }
    return acc.value();
}

double fn_update(double x, double p, const MiscorrectionTable& table) {
    return FnEvaluator(table, p)(x);
}

MiscorrectionTable idealized_table(int n, int t) {
    if (t >= n) throw config_error("idealized_table: t must be < n");
    MiscorrectionTable tab;
    tab.n = n;
    tab.t = t;
    tab.source = TableSource::idealized;
    tab.P.assign(size_t(n), 0.0);
    tab.Q.assign(size_t(n), 0.0);
    for (int i = t; i < n; ++i) tab.P[size_t(i)] = 1.0;
    return tab;
}

namespace {

// Direct DE iteration of x -> f(x;p); used as the solver cross-check.
bool uncoupled_de_converges(const MiscorrectionTable& table, double p) {
    FnEvaluator f(table, p);
    double x = p;
    for (int it = 0; it < 1000000; ++it) {
        double nx = f(x);
        if (nx < 1e-10) return true;
        if (std::abs(nx - x) < 1e-15) return false;
        x = nx;
    }
    return false;
}

} // namespace

ThresholdResult uncoupled_threshold(const MiscorrectionTable& table) {
    FnEvaluator f0(table, 0.0), f1(table, 1.0);
    auto ratio = [&](double x) {
        double num = x - f0(x);
        double den = f1(x) - f0(x);
        if (den < 0.0)
            throw numerical_error("uncoupled_threshold: f_n(x;1) < f_n(x;0) at x=" +
                                  std::to_string(x));
        if (den == 0.0) return std::numeric_limits<double>::infinity();
        return num / den;
    };

    // dense grid: log-spaced near zero, then linear
    const int half = 6000;
    std::vector<double> grid;
    grid.reserve(2 * half);
    for (int i = 0; i < half; ++i)
        grid.push_back(std::pow(10.0, -9.0 + 8.0 * double(i) / (half - 1))); // 1e-9..0.1
    for (int i = 1; i <= half; ++i)
        grid.push_back(0.1 + (1.0 - 1e-6 - 0.1) * double(i) / half);

    // DE from x0 = p converges iff f(x;p) < x on (0,p], i.e. iff
    // p < min_{0<x<=p} ratio(x): find the crossing of p with the running
    // minimum of the ratio (the minimum over all x would be wrong -- beyond
    // p the trajectory never visits x, and there f(x;0) may exceed x).
    double rmin = std::numeric_limits<double>::infinity();
    size_t cross = grid.size();
    size_t argmin = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        double v = ratio(grid[i]);
        if (v < rmin) {
            rmin = v;
            argmin = i;
        }
        if (rmin <= grid[i]) {
            cross = i;
            break;
        }
    }
    if (cross == grid.size())
        throw numerical_error("uncoupled_threshold: no threshold crossing in (0,1)");
    double lo = grid[argmin > 0 ? argmin - 1 : 0];
    double hi = grid[std::min(argmin + 1, cross)];
    double xmin = golden_min(ratio, lo, hi, 1e-12);
    double pstar = std::min(rmin, ratio(xmin));

    ThresholdResult res;
    res.threshold = pstar;
    res.scaled = pstar * table.n;
    res.tol = 1e-9;
    res.lo = pstar;
    res.hi = pstar;
    res.evaluations = int(grid.size());

    // consistency: DE must succeed just below and fail just above
    if (!uncoupled_de_converges(table, pstar * 0.99))
        throw numerical_error("uncoupled_threshold: DE iteration fails below p*");
    if (uncoupled_de_converges(table, std::min(1.0, pstar * 1.01)))
        throw numerical_error("uncoupled_threshold: DE iteration succeeds above p*");
    return res;
}

DETrace coupled_iterate(double init, const std::function<double(double)>& f,
                        CouplingProfile profile, DELimits limits) {
    const int L = profile.L, w = profile.w;
    if (L < 1 || w < 1 || w > L) throw config_error("coupled_iterate: need 1 <= w <= L");

    std::vector<double> x(size_t(L), init);
    std::vector<double> prefix(size_t(L) + 1, 0.0);
    std::vector<double> g(size_t(L + w - 1) + 1, 0.0); // g[c], c = 1..L+w-1
    std::vector<double> gprefix(size_t(L + w - 1) + 1, 0.0);

    DETrace trace;
    trace.first_below.assign(size_t(L), init < 1e-3 ? 0 : -1);
    auto record = [&](int iter) {
        if (limits.record_every > 0 && iter % limits.record_every == 0) {
            trace.states.push_back(x);
            trace.state_iters.push_back(iter);
        }
    };
    record(0);

    double maxv = init;
    int iter = 0;
    for (; iter < limits.max_iters; ++iter) {
        if (maxv < limits.eps_success) break;
        for (int i = 0; i < L; ++i) prefix[size_t(i) + 1] = prefix[size_t(i)] + x[size_t(i)];
        // average input of constraints at position c: bits c-w+1..c (1-based)
        for (int c = 1; c <= L + w - 1; ++c) {
            int hi_idx = std::min(c, L);
            int lo_idx = std::max(c - w, 0);
            double avg = (prefix[size_t(hi_idx)] - prefix[size_t(lo_idx)]) / w;
            g[size_t(c)] = f(avg);
        }
        for (int c = 0; c <= L + w - 1; ++c)
            gprefix[size_t(c)] = (c == 0 ? 0.0 : gprefix[size_t(c) - 1] + g[size_t(c)]);

        double newmax = 0.0, maxdiff = 0.0;
        for (int i = 1; i <= L; ++i) {
            double nx = (gprefix[size_t(i + w - 1)] - gprefix[size_t(i - 1)]) / w;
            maxdiff = std::max(maxdiff, std::abs(nx - x[size_t(i - 1)]));
            x[size_t(i - 1)] = nx;
            newmax = std::max(newmax, nx);
            if (trace.first_below[size_t(i - 1)] < 0 && nx < 1e-3)
                trace.first_below[size_t(i - 1)] = iter + 1;
        }
        maxv = newmax;
        record(iter + 1);
        if (maxv < limits.eps_success) {
            ++iter;
            break;
        }
        if (maxdiff < limits.eps_stall) {
            trace.verdict = Verdict::stalled;
            trace.iterations_used = iter + 1;
            trace.residual = maxv;
            return trace;
        }
    }
    trace.iterations_used = iter;
    trace.residual = maxv;
    trace.verdict = maxv < limits.eps_success ? Verdict::converged_to_zero
                                              : Verdict::iteration_cap;
    return trace;
}

DETrace sc_de_run(double p, const MiscorrectionTable& table, CouplingProfile profile,
                  DELimits limits) {
    if (p < 0.0 || p > 1.0) throw config_error("sc_de_run: p outside [0,1]");
    FnEvaluator f(table, p);
    return coupled_iterate(p, [&](double v) { return f(v); }, profile, limits);
}

ThresholdResult bisect_threshold(const std::function<bool(double)>& succeeds, double lo,
                                 double hi, double tol) {
    int evals = 0;
    bool ok_lo = succeeds(lo);
    bool ok_hi = succeeds(hi);
    evals += 2;
    // expand if the initial guesses do not bracket
    for (int a = 0; a < 8 && !ok_lo; ++a) {
        lo *= 0.6;
        ok_lo = succeeds(lo);
        ++evals;
    }
    for (int a = 0; a < 8 && ok_hi; ++a) {
        hi *= 1.4;
        ok_hi = succeeds(hi);
        ++evals;
    }
    if (!ok_lo || ok_hi)
        throw numerical_error("bisect_threshold: could not bracket the threshold");

    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (succeeds(mid))
            lo = mid;
        else
            hi = mid;
        ++evals;
    }
    ThresholdResult res;
    res.threshold = 0.5 * (lo + hi);
    res.lo = lo;
    res.hi = hi;
    res.tol = tol;
    res.evaluations = evals;
    return res;
}

ThresholdResult sc_threshold(const MiscorrectionTable& table, CouplingProfile profile,
                             double tol, DELimits limits) {
    if (tol <= 0.0) throw config_error("sc_threshold: tol must be positive");
    const int n = table.n, t = table.t;
    auto succeeds = [&](double p) {
        return sc_de_run(p, table, profile, limits).verdict == Verdict::converged_to_zero;
    };
    double lo = double(t) / n;
    double hi = 2.0 * double(t) / n; // average-errors upper bound is 2t
    ThresholdResult res = bisect_threshold(succeeds, lo, hi, tol);
    res.scaled = res.threshold * n;
    return res;
}

void write_trace_csv(const DETrace& trace, std::ostream& os) {
    os << "iteration,position,value\n";
    for (size_t s = 0; s < trace.states.size(); ++s)
        for (size_t i = 0; i < trace.states[s].size(); ++i)
            os << trace.state_iters[s] << "," << (i + 1) << "," << trace.states[s][i]
               << "\n";
}

} // namespace gldpc
