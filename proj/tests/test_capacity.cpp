#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gldpc/capacity.hpp"
#include "gldpc/errors.hpp"

using namespace gldpc;

TEST_CASE("binary entropy landmarks") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.25) == binary_entropy(0.75)); // symmetry
    CHECK(binary_entropy(0.11) == doctest::Approx(0.499916).epsilon(1e-5));
    CHECK(bsc_capacity(0.11) == doctest::Approx(0.500084).epsilon(1e-5));
    CHECK_THROWS_AS(binary_entropy(-0.01), config_error);
    CHECK_THROWS_AS(binary_entropy(1.01), config_error);
}

TEST_CASE("ideal-threshold ratio sweep rises toward 1") {
    // closed form: ratio_nu = 1 - log2(2t/e)/nu + O(log(n)/n), so at t = 3 the
    // sweep is increasing, sits at 1 - 1.1423/20 ~ 0.9429 at nu = 20, and
    // first exceeds 0.95 at nu = 23
    auto rows = capacity_ratio_sweep(3, 8, 23);
    REQUIRE(rows.size() == 16);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
    double log2_2t_over_e = std::log2(6.0) - std::log2(std::exp(1.0));
    CHECK(rows[12].nu == 20);
    CHECK(rows[12].ratio == doctest::Approx(1.0 - log2_2t_over_e / 20.0).epsilon(1e-4));
    CHECK(rows[14].ratio < 0.95); // nu = 22
    CHECK(rows[15].ratio > 0.95); // nu = 23
    CHECK(rows.front().nu == 8);
    CHECK(rows.front().n == 255);
    CHECK(rows.front().rate == doctest::Approx(1.0 - 2.0 * 8 * 3 / 255.0).epsilon(1e-15));
}

TEST_CASE("ratio near 0.88 at nu = 10, t = 3") {
    auto rows = capacity_ratio_sweep(3, 10, 10);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].ratio == doctest::Approx(0.88).epsilon(0.01));
}

TEST_CASE("measured threshold lowers the ratio but still achieves epsilon = 0.2") {
    auto ideal = capacity_ratio_sweep(3, 12, 12);
    auto measured = capacity_ratio_sweep(3, 12, 12, 5.40);
    REQUIRE(measured.size() == 1);
    CHECK(measured[0].p_star == doctest::Approx(5.40 / 4095.0).epsilon(1e-12));
    CHECK(measured[0].ratio < ideal[0].ratio); // rho* < 2t costs efficiency
    CHECK(measured[0].epsilon_achieving);
}

TEST_CASE("even-subcode redundancy includes the extra parity bit") {
    auto plain = capacity_ratio_sweep(3, 8, 8);
    auto even = capacity_ratio_sweep(3, 8, 8, std::nullopt, 0.2, true);
    CHECK(even[0].rate < plain[0].rate);
    CHECK(even[0].rate == doctest::Approx(1.0 - 2.0 * (8.0 * 3 + 1) / 255.0).epsilon(1e-15));
}

TEST_CASE("bad sweep arguments raise config errors") {
    CHECK_THROWS_AS(capacity_ratio_sweep(0, 8, 10), config_error);
    CHECK_THROWS_AS(capacity_ratio_sweep(3, 10, 8), config_error);
    CHECK_THROWS_AS(capacity_ratio_sweep(3, 1, 5), config_error);
}
