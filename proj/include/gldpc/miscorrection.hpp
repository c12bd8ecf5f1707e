#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gldpc/bch.hpp"

namespace gldpc {

enum class TableSource { analytic, idealized, empirical };

std::string to_string(TableSource s);

/**
 * Per-code decoding error probabilities for BDD under i random errors on the
 * other n-1 positions: P(i) when the observed bit is initially wrong, Q(i)
 * when it is initially right. Indexed i = 0..n-1.
 */
struct MiscorrectionTable {
    int n = 0;
    int t = 0;
    bool even_subcode = false;
    TableSource source = TableSource::analytic;
    std::vector<double> P, Q;
    bool clamped = false; // true when the unstated boundary indices were
                          // filled by clamping to the nearest formula value
};

// Exact P/Q from a weight spectrum. An even-subcode spectrum (odd entries
// zero) automatically yields the subcode tables.
MiscorrectionTable miscorrection_table(const SpectrumTable& spectrum);

// Asymptotic (large-n) limits: P(i) = 1 on i >= t; Q constant on its support,
// 1/((t-1)! n) for the plain code and the parity-split values for the
// even-weight subcode.
MiscorrectionTable asymptotic_pq(int n, int t, bool even_subcode);

void write_miscorrection_csv(const MiscorrectionTable& tab, std::ostream& os);

} // namespace gldpc
