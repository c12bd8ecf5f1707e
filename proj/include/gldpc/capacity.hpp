#pragma once

#include <optional>
#include <vector>

#include "gldpc/errors.hpp"

namespace gldpc {

double binary_entropy(double p);
double bsc_capacity(double p);

/// Redundancy efficiency of one (t, nu) ensemble: how much of the Shannon
/// minimum redundancy 1 - C(p*) the actual redundancy 1 - R spends.
struct RedundancyReport {
    int t = 0;
    int nu = 0;
    long n = 0;            // 2^nu - 1
    double rate = 0.0;     // 1 - 2 nu t / n (even subcode: 1 - 2(nu t + 1)/n)
    double p_star = 0.0;   // threshold used for the ratio
    double ratio = 0.0;    // (1 - C(p*)) / (1 - R)
    double epsilon = 0.0;
    bool epsilon_achieving = false; // ratio >= 1 - epsilon
};

/**
 * Sweep nu over [nu_lo, nu_hi] at fixed t. By default the ideal threshold
 * p* = 2t/n is used; passing rho_star substitutes the measured scaled
 * threshold, p* = rho_star/n, to produce the operative report.
 */
std::vector<RedundancyReport> capacity_ratio_sweep(
    int t, int nu_lo, int nu_hi, std::optional<double> rho_star = std::nullopt,
    double epsilon = 0.2, bool even_subcode = false);

} // namespace gldpc
