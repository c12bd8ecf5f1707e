#include "gldpc/galois.hpp"

namespace gldpc {

namespace {

// Primitive polynomials over GF(2), one per degree, from the standard tables
// (Lin & Costello, Appendix B). Bit i is the coefficient of x^i.
constexpr uint32_t kPrimitivePoly[17] = {
    0, 0,
    0x7,     // nu=2:  x^2 + x + 1
    0xb,     // nu=3:  x^3 + x + 1
    0x13,    // nu=4:  x^4 + x + 1
    0x25,    // nu=5:  x^5 + x^2 + 1
    0x43,    // nu=6:  x^6 + x + 1
    0x89,    // nu=7:  x^7 + x^3 + 1
    0x11d,   // nu=8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // nu=9:  x^9 + x^4 + 1
    0x409,   // nu=10: x^10 + x^3 + 1
    0x805,   // nu=11: x^11 + x^2 + 1
    0x1053,  // nu=12: x^12 + x^6 + x^4 + x + 1
    0x201b,  // nu=13: x^13 + x^4 + x^3 + x + 1
    0x4443,  // nu=14: x^14 + x^10 + x^6 + x + 1
    0x8003,  // nu=15: x^15 + x + 1
    0x1100b, // nu=16: x^16 + x^12 + x^3 + x + 1
};

} // namespace

FieldTable::FieldTable(int nu) {
    if (nu < 2 || nu > 16)
        throw config_error("FieldTable: nu must be in [2,16], got " + std::to_string(nu));
    nu_ = nu;
    n_ = (1 << nu) - 1;
    poly_ = kPrimitivePoly[nu];

    log_.assign(size_t(n_) + 1, -1);
    alog_.assign(size_t(n_), 0);

    uint32_t x = 1;
    for (int e = 0; e < n_; ++e) {
        alog_[e] = x;
        if (log_[x] != -1)
            throw numerical_error("FieldTable: polynomial is not primitive");
        log_[x] = e;
        x <<= 1;
        if (x > uint32_t(n_)) x ^= poly_;
    }
    // alpha^n wraps to 1
    uint32_t wrap = alog_[n_ - 1] << 1;
    if (wrap > uint32_t(n_)) wrap ^= poly_;
    if (wrap != 1)
        throw numerical_error("FieldTable: alpha^n != 1");
}

} // namespace gldpc
