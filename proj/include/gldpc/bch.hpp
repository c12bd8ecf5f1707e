#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gldpc/galois.hpp"

namespace gldpc {

enum class SpectrumMethod { exact_enum, dual_macwilliams, binomial_approx };

std::string to_string(SpectrumMethod m);

/**
 * Weight enumerator A_0..A_n of a component code. Exact methods produce
 * integers (stored as doubles); the binomial approximation produces reals.
 * log_counts holds ln(A_l) (-inf for zero entries) for log-domain consumers.
 */
struct SpectrumTable {
    int n = 0;
    int t = 0;
    bool even_subcode = false;
    SpectrumMethod method = SpectrumMethod::exact_enum;
    std::vector<double> counts;     // A_0..A_n
    std::vector<double> log_counts; // ln A_l, -inf where A_l = 0

    bool has_all_one() const { return counts[size_t(n)] > 0.0; }
};

/// Result of bounded-distance decoding one word.
struct DecodeOutcome {
    bool corrected = false;
    int flips = 0;
    std::vector<uint8_t> codeword; // present iff corrected
};

/**
 * A t-error-correcting primitive binary BCH code of length n = 2^nu - 1,
 * or its even-weight subcode. Immutable after construction and safe to share
 * across threads.
 */
class ComponentCode {
public:
    // Generator = lcm of minimal polynomials of alpha..alpha^{2t}, times
    // (x+1) for the even-weight subcode. Rejects (nu,t) combinations where
    // deg(generator) != nu*t, since the designed-dimension formula
    // k = 2^nu - nu*t - 1 assumes exactly nu*t parity bits.
    ComponentCode(int nu, int t, bool even_subcode = false);

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int nu() const { return field_.nu(); }
    bool even_subcode() const { return even_; }
    int design_distance() const { return even_ ? 2 * t_ + 2 : 2 * t_ + 1; }
    const FieldTable& field() const { return field_; }
    const std::vector<uint8_t>& generator_poly() const { return gen_; }

    // Syndrome BDD (Berlekamp-Massey + Chien search). If a codeword within
    // Hamming distance t exists it is returned; otherwise the outcome is a
    // failure and the word is passed through unchanged at the bit level.
    DecodeOutcome bdd_decode(std::span<const uint8_t> word) const;

    // Nonsystematic encoding: message polynomial times generator.
    std::vector<uint8_t> encode(std::span<const uint8_t> message) const;

    bool is_codeword(std::span<const uint8_t> word) const;

    // Syndromes S_1..S_2t of a word; all-zero iff the word is in the parent
    // BCH code (subcode membership additionally needs even weight).
    std::vector<uint32_t> syndromes(std::span<const uint8_t> word) const;

private:
    FieldTable field_;
    int n_, k_, t_;
    bool even_;
    std::vector<uint8_t> gen_; // generator coefficients, gen_[i] = coeff of x^i

    friend struct BddWorkspace;
};

/**
 * Scratch-space decoder for hot loops (simulator): callers maintain the
 * syndrome set incrementally and ask only for the decoded value of a single
 * position. Semantics are identical to ComponentCode::bdd_decode.
 */
struct BddWorkspace {
    explicit BddWorkspace(const ComponentCode& code);

    // Decodes position `pos` of a word with syndromes `synd` (S_1..S_2t),
    // current bit value `bit` at that position and overall word parity
    // `parity` (weight mod 2). Returns the decoded bit.
    uint8_t decode_bit(std::span<const uint32_t> synd, int pos, uint8_t bit, int parity);

    const ComponentCode& code;
    std::vector<uint32_t> sigma, sigma_prev, tmp;
    std::vector<int> error_pos;
};

SpectrumTable weight_spectrum(const ComponentCode& code, SpectrumMethod method);

// Binomial approximation to the BCH weight spectrum; needs no code
// construction (and so also covers parameter sets whose exact spectrum is
// out of reach).
SpectrumTable binomial_spectrum(int nu, int t, bool even_subcode = false);

void write_spectrum_csv(const SpectrumTable& s, std::ostream& os);

} // namespace gldpc
