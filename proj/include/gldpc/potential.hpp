#pragma once

#include <iosfwd>

#include "gldpc/de.hpp"

namespace gldpc {

// U_n(x;p) = integral_0^x (z - fhat_n(z;p)) dz with fhat_n the DE map under
// the idealized (no-miscorrection) table. Adaptive Simpson, |error| <= 1e-12.
double potential_value(double x, double p, int n, int t);

// High-rate limit: U(lambda;rho) = integral_0^lambda (z - rho phi(z;t-1)) dz.
double scaled_potential_value(double lambda, double rho, int t);

// phat_n** = sup{ p : min_{x in [0,1]} U_n(x;p) >= 0 }.
ThresholdResult potential_threshold_finite(int n, int t, double tol = 1e-6);

// rhohat_t** = sup{ rho >= 0 : min_{lambda >= 0} U(lambda;rho) >= 0 };
// the minimizer search is capped at lambda = 4t.
ThresholdResult scaled_potential_threshold(int t, double tol = 1e-4);

// CSV of (state, U) pairs over a uniform grid, for plotting U families.
void write_potential_csv(double param, int t, int n /* 0 for scaled */, double max_state,
                         int points, std::ostream& os);

} // namespace gldpc
