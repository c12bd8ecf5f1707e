#include "gldpc/capacity.hpp"

#include <cmath>

namespace gldpc {

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw config_error("binary_entropy: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double bsc_capacity(double p) { return 1.0 - binary_entropy(p); }

std::vector<RedundancyReport> capacity_ratio_sweep(int t, int nu_lo, int nu_hi,
                                                   std::optional<double> rho_star,
                                                   double epsilon, bool even_subcode) {
    if (t < 1) throw config_error("capacity_ratio_sweep: t must be >= 1");
    if (nu_lo < 2 || nu_hi < nu_lo || nu_hi > 62)
        throw config_error("capacity_ratio_sweep: bad nu range");

    std::vector<RedundancyReport> out;
    for (int nu = nu_lo; nu <= nu_hi; ++nu) {
        RedundancyReport r;
        r.t = t;
        r.nu = nu;
        r.n = (long(1) << nu) - 1;
        double redundancy = even_subcode ? 2.0 * (double(nu) * t + 1.0) / double(r.n)
                                         : 2.0 * double(nu) * t / double(r.n);
        r.rate = 1.0 - redundancy;
        r.p_star = (rho_star ? *rho_star : 2.0 * t) / double(r.n);
        r.ratio = (1.0 - bsc_capacity(r.p_star)) / redundancy;
        r.epsilon = epsilon;
        r.epsilon_achieving = r.ratio >= 1.0 - epsilon;
        out.push_back(r);
    }
    return out;
}

} // namespace gldpc
