#include "gldpc/highrate.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "gldpc/numerics.hpp"

namespace gldpc {

std::string to_string(ScaledVariantKind k) {
    switch (k) {
    case ScaledVariantKind::plain: return "plain";
    case ScaledVariantKind::even_t_even: return "even_t_even";
    case ScaledVariantKind::even_t_odd: return "even_t_odd";
    case ScaledVariantKind::no_miscorrection: return "no_miscorrection";
    }
    return "?";
}

namespace {

constexpr double kGammaCrossover = 30.0;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// e^{-lambda} lambda^i / i!, overflow-safe
double pois_pmf(double lambda, int i) {
    if (lambda == 0.0) return i == 0 ? 1.0 : 0.0;
    return std::exp(double(i) * std::log(lambda) - lambda - std::lgamma(double(i) + 1.0));
}

} // namespace

double poisson_tail_phi(double lambda, int k) {
    if (lambda < 0.0 || k < 0) throw config_error("poisson_tail_phi: bad arguments");
    if (lambda == 0.0) return 0.0;
    if (lambda >= kGammaCrossover)
        return clamp01(boost::math::gamma_p(double(k) + 1.0, lambda));
    KahanSum s;
    for (int i = 0; i <= k; ++i) s.add(pois_pmf(lambda, i));
    return clamp01(1.0 - s.value());
}

PoissonTails poisson_tails(double lambda, int k) {
    if (lambda < 0.0 || k < 0) throw config_error("poisson_tails: bad arguments");
    PoissonTails out;
    out.phi = poisson_tail_phi(lambda, k);
    if (lambda == 0.0) return out;

    // psi = (1 + e^{-2l})/2 - sum of even-index pmf terms up to 2*floor(k/2),
    // varphi = (1 - e^{-2l})/2 - sum of odd-index pmf terms up to floor(k/2)
    KahanSum even_sum, odd_sum;
    for (int i = 0; i <= k / 2; ++i) {
        even_sum.add(pois_pmf(lambda, 2 * i));
        odd_sum.add(pois_pmf(lambda, 2 * i + 1));
    }
    double e2 = std::exp(-2.0 * lambda);
    out.psi = clamp01(0.5 * (1.0 + e2) - even_sum.value());
    out.varphi = clamp01(0.5 * (1.0 - e2) - odd_sum.value());
    return out;
}

ScaledVariant make_variant(ScaledVariantKind kind, int t) {
    if (t < 1) throw config_error("make_variant: t must be >= 1");
    if (kind == ScaledVariantKind::even_t_even && t % 2 != 0)
        throw config_error("make_variant: even_t_even requires even t");
    if (kind == ScaledVariantKind::even_t_odd && t % 2 == 0)
        throw config_error("make_variant: even_t_odd requires odd t");
    return ScaledVariant{kind, t};
}

ScaledVariant even_subcode_variant(int t) {
    return make_variant(t % 2 == 0 ? ScaledVariantKind::even_t_even
                                   : ScaledVariantKind::even_t_odd,
                        t);
}

double scaled_update(double lambda, double rho, ScaledVariant v) {
    if (lambda < 0.0 || rho < 0.0) throw config_error("scaled_update: negative state");
    const int t = v.t;
    const double inv_fact = 1.0 / std::tgamma(double(t)); // 1/(t-1)!
    switch (v.kind) {
    case ScaledVariantKind::no_miscorrection:
        return rho * poisson_tail_phi(lambda, t - 1);
    case ScaledVariantKind::plain:
        return rho * poisson_tail_phi(lambda, t - 1) +
               inv_fact * poisson_tail_phi(lambda, t);
    case ScaledVariantKind::even_t_even: {
        auto tails = poisson_tails(lambda, t);
        return rho * poisson_tail_phi(lambda, t - 1) + inv_fact * tails.psi;
    }
    case ScaledVariantKind::even_t_odd: {
        auto tails = poisson_tails(lambda, t);
        return rho * poisson_tail_phi(lambda, t - 1) + inv_fact * tails.varphi;
    }
    }
    throw config_error("scaled_update: bad variant");
}

DETrace sc_scaled_de_run(double rho, ScaledVariant variant, CouplingProfile profile,
                         DELimits limits) {
    if (rho < 0.0) throw config_error("sc_scaled_de_run: rho must be >= 0");
    return coupled_iterate(
        rho, [&](double lam) { return scaled_update(lam, rho, variant); }, profile,
        limits);
}

ThresholdResult scaled_threshold(ScaledVariant variant, CouplingProfile profile,
                                 double tol, DELimits limits) {
    if (tol <= 0.0) throw config_error("scaled_threshold: tol must be positive");
    auto succeeds = [&](double rho) {
        return sc_scaled_de_run(rho, variant, profile, limits).verdict ==
               Verdict::converged_to_zero;
    };
    double lo = double(variant.t);
    double hi = 2.0 * variant.t; // thresholds sit below 2t
    ThresholdResult res = bisect_threshold(succeeds, lo, hi, tol);
    res.scaled = res.threshold;
    return res;
}

} // namespace gldpc
