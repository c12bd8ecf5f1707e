#pragma once

#include "gldpc/de.hpp"

namespace gldpc {

/// Poisson tail probabilities: full tail phi, even-term tail psi and
/// odd-term tail varphi, each with the cutoffs used by the scaled recursions.
struct PoissonTails {
    double phi = 0.0;
    double psi = 0.0;
    double varphi = 0.0;
};

PoissonTails poisson_tails(double lambda, int k);

// Individual tails (same definitions, computed without the other two).
double poisson_tail_phi(double lambda, int k);

enum class ScaledVariantKind { plain, even_t_even, even_t_odd, no_miscorrection };

std::string to_string(ScaledVariantKind k);

struct ScaledVariant {
    ScaledVariantKind kind = ScaledVariantKind::plain;
    int t = 3;
};

// Parity-checked constructor: even_t_even requires even t, even_t_odd odd t.
ScaledVariant make_variant(ScaledVariantKind kind, int t);

// Picks the parity-correct even-subcode recursion for t.
ScaledVariant even_subcode_variant(int t);

/**
 * One step of the scaled (mean error-message count) recursion:
 *   plain:            rho phi(l;t-1) + phi(l;t)/(t-1)!
 *   even subcode:     rho phi(l;t-1) + psi(l;t)/(t-1)!   (t even)
 *                     rho phi(l;t-1) + varphi(l;t)/(t-1)! (t odd)
 *   no miscorrection: rho phi(l;t-1)
 */
double scaled_update(double lambda, double rho, ScaledVariant variant);

// Default stopping rule for scaled runs: lambda is a count, not a
// probability, so the success threshold is looser than the finite-n one.
// The 1e4 iteration budget is the convention the reference thresholds were
// computed under; coupled thresholds at finite (L, w) depend on the budget
// and grow toward the potential threshold as it increases.
inline DELimits scaled_limits() {
    DELimits lim;
    lim.eps_success = 1e-8;
    lim.max_iters = 10000;
    return lim;
}

DETrace sc_scaled_de_run(double rho, ScaledVariant variant, CouplingProfile profile,
                         DELimits limits = scaled_limits());

ThresholdResult scaled_threshold(ScaledVariant variant, CouplingProfile profile,
                                 double tol = 1e-4, DELimits limits = scaled_limits());

} // namespace gldpc
