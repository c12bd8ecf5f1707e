#include "gldpc/miscorrection.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gldpc/errors.hpp"
#include "gldpc/numerics.hpp"

namespace gldpc {

std::string to_string(TableSource s) {
    switch (s) {
    case TableSource::analytic: return "analytic";
    case TableSource::idealized: return "idealized";
    case TableSource::empirical: return "empirical";
    }
    return "?";
}

namespace {

constexpr double kRangeTol = 1e-9;

double checked_prob(double v, const char* what, int i) {
    if (v < -kRangeTol || v > 1.0 + kRangeTol)
        throw numerical_error(std::string(what) + "(" + std::to_string(i) +
                              ") = " + std::to_string(v) + " outside [0,1]");
    return std::clamp(v, 0.0, 1.0);
}

} // namespace

MiscorrectionTable miscorrection_table(const SpectrumTable& spec) {
    const int n = spec.n, t = spec.t;
    if (2 * t + 1 > n) throw config_error("miscorrection_table: d < 2t+1");
    if (int(spec.counts.size()) != n + 1)
        throw config_error("miscorrection_table: spectrum size mismatch");

    MiscorrectionTable tab;
    tab.n = n;
    tab.t = t;
    tab.even_subcode = spec.even_subcode;
    tab.source = TableSource::analytic;
    tab.P.assign(size_t(n), 0.0);
    tab.Q.assign(size_t(n), 0.0);

    // V(n,i,delta,j) = C(l,j) C(n-l-1,delta-1-j) / C(n-1,i), l = i-delta+2j+1,
    // evaluated in the log domain; A_l weights come in through log_counts.
    auto sum_terms = [&](int i, bool for_q) {
        KahanSum acc;
        const double lbase = lchoose(n - 1, i);
        for (int delta = 1; delta <= t; ++delta) {
            for (int j = 0; j < delta; ++j) {
                int l = i - delta + 2 * j + 1;
                int widx = for_q ? l + 1 : l;
                if (l < 0 || l > n - 1 || widx < 0 || widx > n) continue;
                double la = spec.log_counts[size_t(widx)];
                if (la == neg_inf) continue;
                double lfrac = for_q ? std::log(double(l + 1) / n)
                                     : std::log(double(n - l) / n);
                double lv = lchoose(l, j) + lchoose(n - l - 1, delta - 1 - j) - lbase;
                acc.add(std::exp(lfrac + la + lv));
            }
        }
        return acc.value();
    };

    for (int i = t; i <= n - t - 2; ++i)
        tab.P[size_t(i)] = checked_prob(1.0 - sum_terms(i, false), "P", i);
    for (int i = t + 1; i <= n - t - 1; ++i)
        tab.Q[size_t(i)] = checked_prob(sum_terms(i, true), "Q", i);

    if (spec.has_all_one()) {
        for (int i = n - t - 1; i <= n - 1; ++i) tab.P[size_t(i)] = 1.0;
        for (int i = n - t; i <= n - 1; ++i) tab.Q[size_t(i)] = 1.0;
    } else {
        // the formulas leave these indices unstated; clamp to the nearest
        // in-range value
        for (int i = n - t - 1; i <= n - 1; ++i) tab.P[size_t(i)] = tab.P[size_t(n - t - 2)];
        for (int i = n - t; i <= n - 1; ++i) tab.Q[size_t(i)] = tab.Q[size_t(n - t - 1)];
        tab.clamped = true;
    }
    return tab;
}

MiscorrectionTable asymptotic_pq(int n, int t, bool even_subcode) {
    if (t < 1 || 2 * t + 1 > n) throw config_error("asymptotic_pq: invalid (n,t)");
    if (even_subcode && t < 2)
        throw config_error("asymptotic_pq: even subcode needs t >= 2 ((t-2)! branch)");

    MiscorrectionTable tab;
    tab.n = n;
    tab.t = t;
    tab.even_subcode = even_subcode;
    tab.source = TableSource::analytic;
    tab.P.assign(size_t(n), 0.0);
    tab.Q.assign(size_t(n), 0.0);

    for (int i = t; i < n; ++i) tab.P[size_t(i)] = 1.0;

    if (!even_subcode) {
        double q = 1.0 / (std::tgamma(double(t)) * n); // 1/((t-1)! n)
        for (int i = t + 1; i <= n - t - 1; ++i) tab.Q[size_t(i)] = q;
    } else {
        double q_odd = 1.0 / (std::tgamma(double(t - 1)) * double(n) * n);
        double q_even = 1.0 / (std::tgamma(double(t)) * n);
        for (int i = t + 2; i <= n - t - 2; ++i)
            tab.Q[size_t(i)] = ((i + t) % 2) ? q_odd : q_even;
    }
    return tab;
}

void write_miscorrection_csv(const MiscorrectionTable& tab, std::ostream& os) {
    os << "i,P,Q\n";
    for (int i = 0; i < tab.n; ++i)
        os << i << "," << tab.P[size_t(i)] << "," << tab.Q[size_t(i)] << "\n";
}

} // namespace gldpc
