#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "gldpc/miscorrection.hpp"

namespace gldpc {

/// Coupled-chain geometry: L bit positions, coupling width w, state fixed to
/// zero outside [1, L].
struct CouplingProfile {
    int L = 1025;
    int w = 16;
};

enum class Verdict { converged_to_zero, stalled, iteration_cap };

struct DELimits {
    int max_iters = 20000;
    double eps_success = 1e-10;
    double eps_stall = 1e-12;
    int record_every = 0; // 0: keep no per-iteration state vectors
};

struct DETrace {
    Verdict verdict = Verdict::iteration_cap;
    int iterations_used = 0;
    double residual = 0.0; // final max entry
    // iteration index at which each position first dropped below 1e-3
    // (-1 if it never did); diagnostic for the decoding wave
    std::vector<int> first_below;
    // recorded states (every record_every iterations), starting with iter 0
    std::vector<std::vector<double>> states;
    std::vector<int> state_iters;
};

struct ThresholdResult {
    double threshold = 0.0; // channel parameter p (or rho in scaled solvers)
    double scaled = 0.0;    // n * p (or rho again)
    double lo = 0.0, hi = 0.0; // final bracket: success at lo, failure at hi
    double tol = 0.0;
    int evaluations = 0;
};

/**
 * Precomputed evaluator for the one-dimensional DE map
 *   f_n(x; p) = sum_i C(n-1,i) x^i (1-x)^{n-1-i} (p P(i) + (1-p) Q(i)).
 * The binomial pmf is evaluated in the log domain around its mode; terms are
 * accumulated with compensated summation.
 */
class FnEvaluator {
public:
    FnEvaluator(const MiscorrectionTable& table, double p);
    double operator()(double x) const;
    int n() const { return n_; }

private:
    int n_;
    std::vector<double> coef_;  // p P(i) + (1-p) Q(i)
    std::vector<double> lbinom_; // ln C(n-1, i)
};

double fn_update(double x, double p, const MiscorrectionTable& table);

// No-miscorrection / t-erasure model: P(i) = 1{i >= t}, Q = 0.
MiscorrectionTable idealized_table(int n, int t);

// p* = inf_{x in (0,1)} (x - f_n(x;0)) / (f_n(x;1) - f_n(x;0)),
// grid scan (log-spaced near 0) plus golden-section refinement,
// cross-checked by direct DE iteration on both sides.
ThresholdResult uncoupled_threshold(const MiscorrectionTable& table);

DETrace sc_de_run(double p, const MiscorrectionTable& table, CouplingProfile profile,
                  DELimits limits = {});

ThresholdResult sc_threshold(const MiscorrectionTable& table, CouplingProfile profile,
                             double tol = 1e-5, DELimits limits = {});

// Shared coupled-chain iteration driver: `f` is the per-constraint update
// map applied to the window-averaged state.
DETrace coupled_iterate(double init, const std::function<double(double)>& f,
                        CouplingProfile profile, DELimits limits);

// Generic bisection between a succeeding and a failing channel parameter.
ThresholdResult bisect_threshold(const std::function<bool(double)>& succeeds,
                                 double lo, double hi, double tol);

void write_trace_csv(const DETrace& trace, std::ostream& os);

} // namespace gldpc
