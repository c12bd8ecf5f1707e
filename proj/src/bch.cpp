#include "gldpc/bch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

#include "gldpc/numerics.hpp"

namespace gldpc {

std::string to_string(SpectrumMethod m) {
    switch (m) {
    case SpectrumMethod::exact_enum: return "exact_enum";
    case SpectrumMethod::dual_macwilliams: return "dual_macwilliams";
    case SpectrumMethod::binomial_approx: return "binomial_approx";
    }
    return "?";
}

namespace {

// GF(2) polynomial product; vectors hold coefficients, index = degree.
std::vector<uint8_t> poly_mul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    std::vector<uint8_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) c[i + j] ^= b[j];
    return c;
}

// Minimal polynomial of alpha^s: product of (x - alpha^e) over the cyclotomic
// coset of s. Coefficients land in GF(2).
std::vector<uint8_t> minimal_poly(const FieldTable& f, int s) {
    std::vector<int> coset;
    int e = s;
    do {
        coset.push_back(e);
        e = int((2L * e) % f.n());
    } while (e != s);

    // poly over GF(2^nu), poly[i] = coefficient of x^i
    std::vector<uint32_t> poly{1};
    for (int c : coset) {
        uint32_t root = f.alpha_pow(c);
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= f.mul(poly[i], root);
        }
        poly = std::move(next);
    }
    std::vector<uint8_t> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1)
            throw numerical_error("minimal polynomial has non-binary coefficient");
        out[i] = uint8_t(poly[i]);
    }
    return out;
}

// Bit-block word for codeword enumeration.
struct BitWord {
    std::vector<uint64_t> blk;
    explicit BitWord(int n) : blk((size_t(n) + 63) / 64, 0) {}
    void flip(const BitWord& other) {
        for (size_t i = 0; i < blk.size(); ++i) blk[i] ^= other.blk[i];
    }
    void set(int i) { blk[size_t(i) / 64] |= uint64_t(1) << (i % 64); }
    int weight() const {
        int w = 0;
        for (uint64_t b : blk) w += std::popcount(b);
        return w;
    }
};

// Enumerate all 2^dim combinations of the basis rows via Gray code and
// histogram the weights.
std::vector<double> enumerate_weights(const std::vector<BitWord>& basis, int n) {
    std::vector<double> counts(size_t(n) + 1, 0.0);
    BitWord cur(n);
    counts[0] += 1.0;
    uint64_t total = uint64_t(1) << basis.size();
    for (uint64_t g = 1; g < total; ++g) {
        int bit = std::countr_zero(g);
        cur.flip(basis[size_t(bit)]);
        counts[size_t(cur.weight())] += 1.0;
    }
    return counts;
}

std::vector<BitWord> cyclic_basis(const std::vector<uint8_t>& gen, int n, int dim) {
    std::vector<BitWord> basis;
    basis.reserve(size_t(dim));
    for (int r = 0; r < dim; ++r) {
        BitWord row(n);
        for (size_t i = 0; i < gen.size(); ++i)
            if (gen[i]) row.set(int(i) + r);
        basis.push_back(std::move(row));
    }
    return basis;
}

void fill_log_counts(SpectrumTable& s) {
    s.log_counts.resize(s.counts.size());
    for (size_t i = 0; i < s.counts.size(); ++i)
        s.log_counts[i] = s.counts[i] > 0.0 ? std::log(s.counts[i]) : neg_inf;
}

} // namespace

ComponentCode::ComponentCode(int nu, int t, bool even_subcode)
    : field_(nu), n_(field_.n()), t_(t), even_(even_subcode) {
    if (t < 1) throw config_error("ComponentCode: t must be >= 1");
    if (2 * t + 1 > n_)
        throw config_error("ComponentCode: 2t+1 exceeds block length");

    gen_ = {1};
    std::vector<int> covered; // coset representatives already merged
    for (int s = 1; s <= 2 * t; ++s) {
        // representative: smallest exponent in the coset of s
        int rep = s, e = s;
        do {
            rep = std::min(rep, e);
            e = int((2L * e) % n_);
        } while (e != s);
        if (std::find(covered.begin(), covered.end(), rep) != covered.end()) continue;
        covered.push_back(rep);
        gen_ = poly_mul(gen_, minimal_poly(field_, rep));
    }

    if (int(gen_.size()) - 1 != nu * t)
        throw config_error("ComponentCode: deg(generator) = " +
                           std::to_string(gen_.size() - 1) + " != nu*t = " +
                           std::to_string(nu * t) + "; designed parameters unsupported");

    if (even_) gen_ = poly_mul(gen_, std::vector<uint8_t>{1, 1});
    k_ = n_ - (int(gen_.size()) - 1);
}

std::vector<uint32_t> ComponentCode::syndromes(std::span<const uint8_t> word) const {
    std::vector<uint32_t> s(size_t(2 * t_), 0);
    for (int p = 0; p < n_; ++p) {
        if (!word[size_t(p)]) continue;
        for (int j = 1; j <= 2 * t_; ++j)
            s[size_t(j - 1)] ^= field_.alpha_pow(long(p) * j);
    }
    return s;
}

bool ComponentCode::is_codeword(std::span<const uint8_t> word) const {
    auto s = syndromes(word);
    if (std::any_of(s.begin(), s.end(), [](uint32_t v) { return v != 0; })) return false;
    if (even_) {
        int w = 0;
        for (uint8_t b : word) w ^= b;
        if (w) return false;
    }
    return true;
}

std::vector<uint8_t> ComponentCode::encode(std::span<const uint8_t> message) const {
    if (int(message.size()) != k_)
        throw config_error("encode: message length must equal k");
    std::vector<uint8_t> out(size_t(n_), 0);
    for (int i = 0; i < k_; ++i)
        if (message[size_t(i)])
            for (size_t j = 0; j < gen_.size(); ++j) out[size_t(i) + j] ^= gen_[j];
    return out;
}

BddWorkspace::BddWorkspace(const ComponentCode& c)
    : code(c),
      sigma(size_t(c.t()) + 1),
      sigma_prev(size_t(c.t()) + 1),
      tmp(size_t(c.t()) + 1) {
    error_pos.reserve(size_t(c.t()));
}

uint8_t BddWorkspace::decode_bit(std::span<const uint32_t> synd, int pos, uint8_t bit,
                                 int parity) {
    const FieldTable& f = code.field();
    const int n = code.n();
    const int t = code.t();
    const int two_t = 2 * t;

    bool all_zero = true;
    for (int j = 0; j < two_t; ++j)
        if (synd[size_t(j)]) { all_zero = false; break; }
    if (all_zero) {
        // already a BCH codeword; for the even subcode it must also have
        // even weight, otherwise decoding fails and the bit passes through
        if (code.even_subcode() && (parity & 1)) return bit;
        return bit;
    }

    // Berlekamp-Massey over GF(2^nu) on S_1..S_2t
    std::fill(sigma.begin(), sigma.end(), 0u);
    std::fill(sigma_prev.begin(), sigma_prev.end(), 0u);
    sigma[0] = 1;
    sigma_prev[0] = 1;
    int L = 0, m = 1;
    uint32_t b = 1;
    for (int r = 0; r < two_t; ++r) {
        uint32_t d = synd[size_t(r)];
        for (int i = 1; i <= L && i <= int(sigma.size()) - 1; ++i)
            if (sigma[size_t(i)] && r - i >= 0) d ^= f.mul(sigma[size_t(i)], synd[size_t(r - i)]);
        if (d == 0) {
            ++m;
        } else if (2 * L <= r) {
            std::copy(sigma.begin(), sigma.end(), tmp.begin());
            uint32_t coef = f.div(d, b);
            for (int i = 0; i + m <= int(sigma.size()) - 1; ++i)
                if (sigma_prev[size_t(i)])
                    sigma[size_t(i + m)] ^= f.mul(coef, sigma_prev[size_t(i)]);
            L = r + 1 - L;
            if (L > t) return bit; // more than t errors: BDD failure
            std::copy(tmp.begin(), tmp.end(), sigma_prev.begin());
            b = d;
            m = 1;
        } else {
            uint32_t coef = f.div(d, b);
            for (int i = 0; i + m <= int(sigma.size()) - 1; ++i)
                if (sigma_prev[size_t(i)])
                    sigma[size_t(i + m)] ^= f.mul(coef, sigma_prev[size_t(i)]);
            ++m;
        }
    }

    // Chien search: error at p iff sigma(alpha^{-p}) = 0
    error_pos.clear();
    for (int p = 0; p < n && int(error_pos.size()) <= L; ++p) {
        uint32_t v = sigma[0];
        for (int i = 1; i <= L; ++i)
            if (sigma[size_t(i)]) v ^= f.mul(sigma[size_t(i)], f.alpha_pow(-long(p) * i));
        if (v == 0) error_pos.push_back(p);
    }
    if (int(error_pos.size()) != L) return bit;

    // verify the located pattern actually cancels all syndromes
    for (int j = 1; j <= two_t; ++j) {
        uint32_t s = synd[size_t(j - 1)];
        for (int p : error_pos) s ^= f.alpha_pow(long(p) * j);
        if (s != 0) return bit;
    }
    if (code.even_subcode() && ((parity + L) & 1)) return bit;

    for (int p : error_pos)
        if (p == pos) return uint8_t(bit ^ 1);
    return bit;
}

DecodeOutcome ComponentCode::bdd_decode(std::span<const uint8_t> word) const {
    if (int(word.size()) != n_)
        throw config_error("bdd_decode: word length must equal n");
    auto synd = syndromes(word);
    int parity = 0;
    for (uint8_t b : word) parity ^= b;

    BddWorkspace ws(*this);
    // Probe position 0; the workspace records the located error positions,
    // which is what we need to build the full outcome.
    bool synd_zero = std::all_of(synd.begin(), synd.end(), [](uint32_t v) { return v == 0; });

    DecodeOutcome out;
    if (synd_zero) {
        if (even_ && (parity & 1)) return out; // odd-weight BCH word, not in subcode
        out.corrected = true;
        out.flips = 0;
        out.codeword.assign(word.begin(), word.end());
        return out;
    }

    uint8_t decoded0 = ws.decode_bit(synd, 0, word[0], parity);
    // failure iff no flips were committed; detect via the workspace state
    if (ws.error_pos.empty() || int(ws.error_pos.size()) > t_) return out;
    // re-validate: decode_bit returns the input bit on failure paths too, so
    // reconstruct and check
    std::vector<uint8_t> cand(word.begin(), word.end());
    for (int p : ws.error_pos) cand[size_t(p)] ^= 1;
    if (!is_codeword(cand)) return out;
    (void)decoded0;
    out.corrected = true;
    out.flips = int(ws.error_pos.size());
    out.codeword = std::move(cand);
    return out;
}

SpectrumTable weight_spectrum(const ComponentCode& code, SpectrumMethod method) {
    SpectrumTable s;
    s.n = code.n();
    s.t = code.t();
    s.even_subcode = code.even_subcode();
    s.method = method;
    const int n = code.n(), k = code.k();

    if (method == SpectrumMethod::exact_enum) {
        if (k > 24)
            throw config_error("exact_enum requires k <= 24, got k=" + std::to_string(k));
        s.counts = enumerate_weights(cyclic_basis(code.generator_poly(), n, k), n);
    } else if (method == SpectrumMethod::dual_macwilliams) {
        int r = n - k;
        if (r > 24)
            throw config_error("dual_macwilliams requires n-k <= 24, got " + std::to_string(r));
        // dual of a cyclic code: generated by the reciprocal of h(x) = (x^n-1)/g(x)
        const auto& g = code.generator_poly();
        std::vector<uint8_t> xn1(size_t(n) + 1, 0);
        xn1[0] = 1;
        xn1[size_t(n)] = 1;
        // long division xn1 / g
        std::vector<uint8_t> rem = xn1, h(size_t(n - (g.size() - 1)) + 1, 0);
        for (int d = n; d >= int(g.size()) - 1; --d) {
            if (!rem[size_t(d)]) continue;
            int shift = d - (int(g.size()) - 1);
            h[size_t(shift)] = 1;
            for (size_t i = 0; i < g.size(); ++i) rem[size_t(shift) + i] ^= g[i];
        }
        if (std::any_of(rem.begin(), rem.end(), [](uint8_t v) { return v != 0; }))
            throw numerical_error("generator does not divide x^n - 1");
        std::vector<uint8_t> hrev(h.rbegin(), h.rend());
        auto dual_counts = enumerate_weights(cyclic_basis(hrev, n, r), n);

        // MacWilliams transform via the Krawtchouk recurrence
        // (l+1) K_{l+1}(j) = (n-2j) K_l(j) - (n-l+1) K_{l-1}(j)
        s.counts.assign(size_t(n) + 1, 0.0);
        std::vector<long double> Kprev(size_t(n) + 1), Kcur(size_t(n) + 1), Knext(size_t(n) + 1);
        for (int j = 0; j <= n; ++j) {
            Kprev[size_t(j)] = 1.0L;
            Kcur[size_t(j)] = (long double)(n - 2 * j);
        }
        long double scale = 1.0L / std::pow(2.0L, (long double)r);
        for (int l = 0; l <= n; ++l) {
            const std::vector<long double>& K = (l == 0) ? Kprev : Kcur;
            long double acc = 0.0L;
            for (int j = 0; j <= n; ++j)
                if (dual_counts[size_t(j)] > 0.0)
                    acc += (long double)dual_counts[size_t(j)] * K[size_t(j)];
            s.counts[size_t(l)] = double(std::round(acc * scale));
            if (l >= 1) {
                for (int j = 0; j <= n; ++j)
                    Knext[size_t(j)] = ((long double)(n - 2 * j) * Kcur[size_t(j)] -
                                       (long double)(n - l + 1) * Kprev[size_t(j)]) /
                                      (long double)(l + 1);
                std::swap(Kprev, Kcur);
                std::swap(Kcur, Knext);
            }
        }
    } else {
        return binomial_spectrum(code.nu(), code.t(), code.even_subcode());
    }

    fill_log_counts(s);
    return s;
}

SpectrumTable binomial_spectrum(int nu, int t, bool even_subcode) {
    if (nu < 2 || nu > 30) throw config_error("binomial_spectrum: nu out of range");
    if (t < 1) throw config_error("binomial_spectrum: t must be >= 1");
    SpectrumTable s;
    s.n = (1 << nu) - 1;
    s.t = t;
    s.even_subcode = even_subcode;
    s.method = SpectrumMethod::binomial_approx;
    const int n = s.n, d = 2 * t + 1;
    const double log2v = std::log(2.0);
    s.counts.assign(size_t(n) + 1, 0.0);
    s.log_counts.assign(size_t(n) + 1, neg_inf);
    s.counts[0] = 1.0;
    s.log_counts[0] = 0.0;
    if (!even_subcode || n % 2 == 0) {
        s.counts[size_t(n)] = 1.0;
        s.log_counts[size_t(n)] = 0.0;
    }
    for (int l = d; l <= n - d; ++l) {
        if (even_subcode && (l % 2)) continue;
        double lc = -double(nu) * t * log2v + lchoose(n, l);
        s.log_counts[size_t(l)] = lc;
        s.counts[size_t(l)] = std::exp(lc);
    }
    return s;
}

void write_spectrum_csv(const SpectrumTable& s, std::ostream& os) {
    os << "l,A_l,method\n";
    for (size_t l = 0; l < s.counts.size(); ++l)
        os << l << "," << s.counts[l] << "," << to_string(s.method) << "\n";
}

} // namespace gldpc
