#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gldpc/bch.hpp"
#include "gldpc/errors.hpp"
#include "gldpc/galois.hpp"
#include "gldpc/numerics.hpp"

using namespace gldpc;

namespace {

std::vector<uint8_t> random_word(int n, std::mt19937_64& rng, double density = 0.5) {
    std::vector<uint8_t> w(size_t(n), 0);
    std::bernoulli_distribution bit(density);
    for (auto& v : w) v = bit(rng) ? 1 : 0;
    return w;
}

int weight(const std::vector<uint8_t>& w) {
    return int(std::accumulate(w.begin(), w.end(), 0));
}

// Decoded word under the pass-through failure semantics.
std::vector<uint8_t> decoded_word(const ComponentCode& code, const std::vector<uint8_t>& w) {
    auto out = code.bdd_decode(w);
    return out.corrected ? out.codeword : w;
}

} // namespace

TEST_CASE("GF(8) arithmetic relations") {
    FieldTable f(3);
    CHECK(f.n() == 7);
    CHECK(f.primitive_poly() == 0xb);
    CHECK(f.alpha_pow(0) == 1);
    CHECK(f.alpha_pow(7) == 1); // alpha^n = 1
    for (int e = 0; e < 7; ++e) CHECK(f.log(f.alpha_pow(e)) == e);
    for (uint32_t a = 1; a < 8; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        for (uint32_t b = 1; b < 8; ++b) {
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.div(f.mul(a, b), b) == a);
        }
    }
    CHECK(f.mul(0, 5) == 0);
    CHECK_THROWS_AS(f.div(1, 0), numerical_error);
}

TEST_CASE("GF(256) log/antilog roundtrip") {
    FieldTable f(8);
    CHECK(f.n() == 255);
    CHECK(f.primitive_poly() == 0x11d);
    for (int e = 0; e < 255; ++e) CHECK(f.log(f.alpha_pow(e)) == e);
    // negative exponents reduce mod n
    CHECK(f.alpha_pow(-1) == f.inv(f.alpha_pow(1)));
    CHECK(f.alpha_pow(-255) == 1);
}

TEST_CASE("field degree limits") {
    CHECK_THROWS_AS(FieldTable(1), config_error);
    CHECK_THROWS_AS(FieldTable(17), config_error);
}

TEST_CASE("(7,4,3) Hamming construction") {
    ComponentCode code(3, 1);
    CHECK(code.n() == 7);
    CHECK(code.k() == 4);
    CHECK(code.design_distance() == 3);
    // generator x^3 + x + 1
    CHECK(code.generator_poly() == std::vector<uint8_t>{1, 1, 0, 1});
}

TEST_CASE("(15,7,5) BCH construction") {
    ComponentCode code(4, 2);
    CHECK(code.n() == 15);
    CHECK(code.k() == 7);
    // generator (x^4+x+1)(x^4+x^3+x^2+x+1) = x^8+x^7+x^6+x^4+1
    CHECK(code.generator_poly() == std::vector<uint8_t>{1, 0, 0, 0, 1, 0, 1, 1, 1});
}

TEST_CASE("(7,3,4) even-weight subcode construction") {
    ComponentCode code(3, 1, true);
    CHECK(code.n() == 7);
    CHECK(code.k() == 3);
    CHECK(code.design_distance() == 4);
    // (x+1)(x^3+x+1) = x^4+x^3+x^2+1
    CHECK(code.generator_poly() == std::vector<uint8_t>{1, 0, 1, 1, 1});
    // every codeword has even weight
    for (uint32_t m = 0; m < 8; ++m) {
        std::vector<uint8_t> msg{uint8_t(m & 1), uint8_t((m >> 1) & 1), uint8_t((m >> 2) & 1)};
        CHECK(weight(code.encode(msg)) % 2 == 0);
    }
}

TEST_CASE("degenerate (nu,t) combinations are rejected") {
    // deg(generator) < nu*t when cyclotomic cosets collide (e.g. nu=4, t=3
    // gives the (15,5,7) code with only 10 parity bits)
    CHECK_THROWS_AS(ComponentCode(4, 3), config_error);
}

TEST_CASE("encode produces codewords with zero syndromes") {
    ComponentCode code(5, 2);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto msg = random_word(code.k(), rng);
        auto cw = code.encode(msg);
        CHECK(code.is_codeword(cw));
        auto synd = code.syndromes(cw);
        for (auto s : synd) CHECK(s == 0);
    }
}

TEST_CASE("BDD corrects up to t errors and never pretends otherwise") {
    ComponentCode code(4, 2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto cw = code.encode(random_word(code.k(), rng));
        auto word = cw;
        std::vector<int> pos(size_t(code.n()));
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        int nerr = int(rng() % 3); // 0..2 = t errors
        for (int i = 0; i < nerr; ++i) word[size_t(pos[size_t(i)])] ^= 1;
        auto out = code.bdd_decode(word);
        REQUIRE(out.corrected);
        CHECK(out.flips == nerr);
        CHECK(out.codeword == cw);
    }
}

TEST_CASE("BDD beyond t errors either fails or lands on a wrong codeword") {
    ComponentCode code(4, 2);
    std::mt19937_64 rng(13);
    int miscorrections = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto cw = code.encode(random_word(code.k(), rng));
        auto word = cw;
        std::vector<int> pos(size_t(code.n()));
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int i = 0; i < 3; ++i) word[size_t(pos[size_t(i)])] ^= 1; // t+1 errors
        auto out = code.bdd_decode(word);
        if (out.corrected) {
            ++miscorrections;
            CHECK(out.codeword != cw);
            CHECK(code.is_codeword(out.codeword));
            CHECK(out.flips <= code.t());
        }
    }
    CHECK(miscorrections > 0); // 3 errors do sometimes miscorrect a t=2 code
}

TEST_CASE("perfect-code miscorrection: every weight-2 pattern on (7,4)") {
    ComponentCode code(3, 1);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            std::vector<uint8_t> word(7, 0);
            word[size_t(a)] = word[size_t(b)] = 1;
            auto out = code.bdd_decode(word);
            REQUIRE(out.corrected); // Hamming spheres cover everything
            CHECK(out.flips == 1);
            CHECK(weight(out.codeword) == 3);
        }
}

TEST_CASE("coset symmetry, exhaustive on (7,4)") {
    ComponentCode code(3, 1);
    std::vector<std::vector<uint8_t>> codewords;
    for (uint32_t m = 0; m < 16; ++m) {
        std::vector<uint8_t> msg{uint8_t(m & 1), uint8_t((m >> 1) & 1), uint8_t((m >> 2) & 1),
                                 uint8_t((m >> 3) & 1)};
        codewords.push_back(code.encode(msg));
    }
    for (uint32_t e = 0; e < 128; ++e) {
        std::vector<uint8_t> err(7);
        for (int i = 0; i < 7; ++i) err[size_t(i)] = uint8_t((e >> i) & 1);
        auto de = decoded_word(code, err);
        for (const auto& cw : codewords) {
            auto shifted = err;
            for (int i = 0; i < 7; ++i) shifted[size_t(i)] ^= cw[size_t(i)];
            auto ds = decoded_word(code, shifted);
            for (int i = 0; i < 7; ++i) CHECK(ds[size_t(i)] == (de[size_t(i)] ^ cw[size_t(i)]));
        }
    }
}

TEST_CASE("single-bit workspace decoder agrees with full BDD") {
    ComponentCode code(5, 2);
    BddWorkspace ws(code);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        auto word = random_word(code.n(), rng, 0.1);
        auto full = decoded_word(code, word);
        auto synd = code.syndromes(word);
        int parity = weight(word) % 2;
        for (int pos = 0; pos < code.n(); ++pos)
            CHECK(ws.decode_bit(synd, pos, word[size_t(pos)], parity) == full[size_t(pos)]);
    }
}

TEST_CASE("single-bit workspace decoder honours the even-subcode parity check") {
    ComponentCode code(5, 2, true);
    BddWorkspace ws(code);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto word = random_word(code.n(), rng, 0.15);
        auto full = decoded_word(code, word);
        auto synd = code.syndromes(word);
        int parity = weight(word) % 2;
        for (int pos = 0; pos < code.n(); ++pos)
            CHECK(ws.decode_bit(synd, pos, word[size_t(pos)], parity) == full[size_t(pos)]);
    }
}

TEST_CASE("(7,4) exact weight spectrum") {
    ComponentCode code(3, 1);
    auto s = weight_spectrum(code, SpectrumMethod::exact_enum);
    CHECK(s.counts == std::vector<double>{1, 0, 0, 7, 7, 0, 0, 1});
    CHECK(s.has_all_one());
}

TEST_CASE("(7,3) even subcode exact weight spectrum") {
    ComponentCode code(3, 1, true);
    auto s = weight_spectrum(code, SpectrumMethod::exact_enum);
    CHECK(s.counts == std::vector<double>{1, 0, 0, 0, 7, 0, 0, 0});
    CHECK_FALSE(s.has_all_one());
}

TEST_CASE("(15,7) exact weight spectrum") {
    ComponentCode code(4, 2);
    auto s = weight_spectrum(code, SpectrumMethod::exact_enum);
    CHECK(s.counts ==
          std::vector<double>{1, 0, 0, 0, 0, 18, 30, 15, 15, 30, 18, 0, 0, 0, 0, 1});
}

TEST_CASE("MacWilliams transform of the dual matches direct enumeration") {
    for (auto [nu, t, even] : {std::tuple{4, 2, false}, {4, 2, true}, {5, 2, false}}) {
        ComponentCode code(nu, t, even);
        auto direct = weight_spectrum(code, SpectrumMethod::exact_enum);
        auto via_dual = weight_spectrum(code, SpectrumMethod::dual_macwilliams);
        REQUIRE(direct.counts.size() == via_dual.counts.size());
        for (size_t l = 0; l < direct.counts.size(); ++l)
            CHECK(via_dual.counts[l] == doctest::Approx(direct.counts[l]).epsilon(1e-9));
    }
}

TEST_CASE("binomial approximation spectrum shape") {
    auto s = binomial_spectrum(8, 3);
    CHECK(s.n == 255);
    CHECK(s.counts[0] == 1.0);
    CHECK(s.counts[255] == 1.0);
    for (int l = 1; l < 7; ++l) CHECK(s.counts[size_t(l)] == 0.0); // below distance
    // interior: 2^{-nu t} C(n,l)
    double expect = std::exp(lchoose(255, 100) - 24.0 * std::log(2.0));
    CHECK(s.counts[100] == doctest::Approx(expect).epsilon(1e-12));

    auto se = binomial_spectrum(8, 3, true);
    for (int l = 1; l < 256; l += 2) CHECK(se.counts[size_t(l)] == 0.0);
    CHECK(se.counts[100] == s.counts[100]);
    CHECK_FALSE(se.has_all_one()); // n odd: the all-one word has odd weight
}
