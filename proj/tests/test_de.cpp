#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <vector>

#include "gldpc/bch.hpp"
#include "gldpc/de.hpp"
#include "gldpc/errors.hpp"
#include "gldpc/numerics.hpp"

using namespace gldpc;

namespace {

// Direct textbook evaluation of f_n(x;p), no log-domain tricks.
double naive_fn(double x, double p, const MiscorrectionTable& tab) {
    const int n = tab.n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double coef = p * tab.P[size_t(i)] + (1.0 - p) * tab.Q[size_t(i)];
        if (coef == 0.0) continue;
        sum += std::exp(lchoose(n - 1, i) + i * std::log(x) + (n - 1 - i) * std::log1p(-x)) *
               coef;
    }
    return sum;
}

bool iterates_to_zero(double p, const MiscorrectionTable& tab, int iters = 20000) {
    double x = p;
    for (int l = 0; l < iters; ++l) {
        x = fn_update(x, p, tab);
        if (x < 1e-13) return true;
    }
    return false;
}

} // namespace

TEST_CASE("FnEvaluator matches direct summation") {
    ComponentCode code(4, 2);
    auto tab = miscorrection_table(weight_spectrum(code, SpectrumMethod::exact_enum));
    for (double x : {1e-4, 0.01, 0.1, 0.3, 0.7, 0.95})
        for (double p : {0.0, 0.2, 0.5, 1.0}) {
            INFO("x = ", x, ", p = ", p);
            CHECK(fn_update(x, p, tab) ==
                  doctest::Approx(naive_fn(x, p, tab)).epsilon(1e-12));
        }
}

TEST_CASE("f_n is affine in p") {
    auto tab = miscorrection_table(binomial_spectrum(8, 3));
    for (double x : {0.005, 0.02, 0.05}) {
        double f0 = fn_update(x, 0.0, tab);
        double f1 = fn_update(x, 1.0, tab);
        for (double p : {0.1, 0.4, 0.9})
            CHECK(fn_update(x, p, tab) ==
                  doctest::Approx(f0 + p * (f1 - f0)).epsilon(1e-11));
    }
}

TEST_CASE("idealized table gives the closed-form t=1 map") {
    // P = 1{i >= 1}, Q = 0: f_n(x;p) = p (1 - (1-x)^{n-1})
    auto tab = idealized_table(7, 1);
    for (double x : {0.01, 0.2, 0.6})
        for (double p : {0.1, 0.5, 0.9})
            CHECK(fn_update(x, p, tab) ==
                  doctest::Approx(p * (1.0 - std::pow(1.0 - x, 6))).epsilon(1e-12));
}

TEST_CASE("uncoupled threshold matches a DE-iteration bisection oracle") {
    ComponentCode code(3, 1);
    // near p* the iteration converges arbitrarily slowly, so the oracle
    // checks a bracket the iteration budget can resolve rather than equality
    SUBCASE("idealized (7,1)") {
        auto tab = idealized_table(7, 1);
        auto res = uncoupled_threshold(tab);
        // closed form: f(x;p) = p (1 - (1-x)^6) is concave, so the threshold
        // is the stability condition 6p = 1
        CHECK(res.threshold == doctest::Approx(1.0 / 6.0).epsilon(1e-7));
        CHECK(iterates_to_zero(res.threshold - 1e-3, tab));
        CHECK_FALSE(iterates_to_zero(res.threshold + 1e-3, tab));
    }
    SUBCASE("analytic (7,4)") {
        auto tab = miscorrection_table(weight_spectrum(code, SpectrumMethod::exact_enum));
        auto res = uncoupled_threshold(tab);
        CHECK(iterates_to_zero(res.threshold - 1e-3, tab));
        CHECK_FALSE(iterates_to_zero(res.threshold + 1e-3, tab));
        CHECK(res.scaled == doctest::Approx(res.threshold * 7).epsilon(1e-12));
    }
}

TEST_CASE("coupled chain with L = w = 1 reduces to the uncoupled recursion") {
    auto tab = miscorrection_table(weight_spectrum(ComponentCode(4, 2),
                                                   SpectrumMethod::exact_enum));
    CouplingProfile prof{1, 1};
    auto thr = uncoupled_threshold(tab);
    DELimits lim;
    lim.max_iters = 30000;
    CHECK(sc_de_run(thr.threshold * 0.98, tab, prof, lim).verdict ==
          Verdict::converged_to_zero);
    CHECK(sc_de_run(thr.threshold * 1.02, tab, prof, lim).verdict !=
          Verdict::converged_to_zero);
}

TEST_CASE("p = 0 converges immediately") {
    auto tab = idealized_table(15, 2);
    auto tr = sc_de_run(0.0, tab, CouplingProfile{9, 3}, DELimits{});
    CHECK(tr.verdict == Verdict::converged_to_zero);
    CHECK(tr.iterations_used <= 1);
}

TEST_CASE("coupled state stays reflection-symmetric") {
    auto tab = idealized_table(15, 2);
    DELimits lim;
    lim.max_iters = 60;
    lim.record_every = 10;
    auto tr = sc_de_run(0.08, tab, CouplingProfile{33, 4}, lim);
    REQUIRE(!tr.states.empty());
    for (const auto& state : tr.states) {
        REQUIRE(state.size() == 33);
        for (size_t i = 0; i < state.size(); ++i)
            CHECK(state[i] == doctest::Approx(state[state.size() - 1 - i]).epsilon(1e-12));
    }
}

TEST_CASE("decoding wave moves inward from the boundaries") {
    auto tab = idealized_table(15, 2);
    DELimits lim;
    lim.max_iters = 20000;
    CouplingProfile prof{65, 4};
    // pick a p between the uncoupled and coupled thresholds so the wave is real
    double p_unc = uncoupled_threshold(tab).threshold;
    auto tr = sc_de_run(p_unc * 1.05, tab, prof, lim);
    REQUIRE(tr.verdict == Verdict::converged_to_zero);
    REQUIRE(int(tr.first_below.size()) == prof.L);
    int mid = prof.L / 2;
    for (int i = 1; i <= mid; ++i) CHECK(tr.first_below[size_t(i)] >= tr.first_below[size_t(i - 1)]);
    for (int i = mid + 1; i < prof.L; ++i)
        CHECK(tr.first_below[size_t(i)] <= tr.first_below[size_t(i - 1)]);
}

TEST_CASE("coupled threshold brackets by verdict") {
    auto tab = idealized_table(15, 2);
    CouplingProfile prof{65, 4};
    DELimits lim;
    lim.max_iters = 20000;
    auto res = sc_threshold(tab, prof, 1e-4, lim);
    CHECK(sc_de_run(res.threshold - 3e-4, tab, prof, lim).verdict ==
          Verdict::converged_to_zero);
    CHECK(sc_de_run(res.threshold + 3e-4, tab, prof, lim).verdict !=
          Verdict::converged_to_zero);
    // coupling beats the uncoupled threshold
    CHECK(res.threshold > uncoupled_threshold(tab).threshold);
}

TEST_CASE("generic bisection rejects an unbracketable predicate") {
    CHECK_THROWS_AS(bisect_threshold([](double) { return true; }, 0.1, 0.9, 1e-6),
                    numerical_error);
}

TEST_CASE("bad arguments raise config errors") {
    auto tab = idealized_table(15, 2);
    CHECK_THROWS_AS(sc_de_run(-0.1, tab, CouplingProfile{}, DELimits{}), config_error);
    CHECK_THROWS_AS(sc_de_run(1.1, tab, CouplingProfile{}, DELimits{}), config_error);
    CHECK_THROWS_AS(sc_de_run(0.1, tab, CouplingProfile{0, 1}, DELimits{}), config_error);
    CHECK_THROWS_AS(sc_de_run(0.1, tab, CouplingProfile{5, 0}, DELimits{}), config_error);
}
