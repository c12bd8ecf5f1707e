#pragma once

#include <cstdint>
#include <vector>

#include "gldpc/errors.hpp"

namespace gldpc {

/**
 * Arithmetic tables for GF(2^nu), 2 <= nu <= 16.
 *
 * Elements are represented as bit-vectors of polynomial coefficients packed
 * into a uint32_t. The primitive polynomial for each nu is fixed from a
 * standard table so that all derived structures are reproducible.
 */
class FieldTable {
public:
    explicit FieldTable(int nu);

    int nu() const { return nu_; }
    int n() const { return n_; } // multiplicative group order, 2^nu - 1

    uint32_t primitive_poly() const { return poly_; }

    // Discrete log base alpha; x must be nonzero.
    int log(uint32_t x) const { return log_[x]; }

    // alpha^e for any integer exponent (reduced mod n).
    uint32_t alpha_pow(long e) const {
        long r = e % n_;
        if (r < 0) r += n_;
        return alog_[r];
    }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return alog_[(log_[a] + log_[b]) % n_];
    }

    uint32_t div(uint32_t a, uint32_t b) const {
        if (b == 0) throw numerical_error("GF division by zero");
        if (a == 0) return 0;
        int d = log_[a] - log_[b];
        if (d < 0) d += n_;
        return alog_[d];
    }

    uint32_t inv(uint32_t a) const { return div(1, a); }

private:
    int nu_;
    int n_;
    uint32_t poly_;
    std::vector<int> log_;       // size 2^nu; log_[0] unused
    std::vector<uint32_t> alog_; // size n, alog_[e] = alpha^e
};

} // namespace gldpc
