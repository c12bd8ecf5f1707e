#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gldpc/bch.hpp"
#include "gldpc/de.hpp"

namespace gldpc {

/**
 * Sampled Tanner graph: degree-2 bit nodes, degree-n constraint nodes.
 * The uncoupled ensemble is the coupled one with L = w = 1.
 */
struct TannerGraph {
    int n = 0; // constraint degree
    int m = 0; // constraints per position
    int L = 1;
    int w = 1;
    uint64_t seed = 0;

    struct Endpoint {
        int32_t constraint;
        int32_t socket;
    };
    // two endpoints per bit node
    std::vector<std::array<Endpoint, 2>> bits;
    // flattened [constraint * n + socket] -> bit node index
    std::vector<int32_t> constraint_bits;
    // which of the bit's two edges lands in this socket
    std::vector<int8_t> constraint_slot;

    int num_bits() const { return int(bits.size()); }
    int num_constraints() const { return int(constraint_bits.size()) / n; }
    bool coupled() const { return L > 1 || w > 1; }
    int bit_position(int b) const { return b / (m * n / 2) + 1; }         // 1..L
    int constraint_position(int c) const { return c / m + 1; }            // 1..L+w-1
};

TannerGraph sample_uncoupled_graph(const ComponentCode& code, int m, uint64_t seed);
TannerGraph sample_coupled_graph(const ComponentCode& code, int m, CouplingProfile profile,
                                 uint64_t seed);

struct SimTrace {
    struct IterStats {
        long message_errors = 0;
        long bit_errors = 0;
        std::vector<long> per_position; // message errors per bit position (coupled)
    };
    enum class Verdict { success, failure, cap };

    std::vector<IterStats> iters; // index 0 = channel state before decoding
    Verdict verdict = Verdict::cap;
    int iterations_used = 0;
    double p = 0.0;
    uint64_t graph_seed = 0;
    uint64_t noise_seed = 0;
};

/**
 * Extrinsic iterative HDD (message passing with BDD component decoders).
 * The message a bit sends to one constraint is the BDD decision computed at
 * its *other* constraint with the bit's own slot replaced by the channel
 * value; this is not row/column iteration.
 *
 * `transmitted` must satisfy every constraint when provided; by default the
 * all-zero codeword is used.
 */
SimTrace simulate_hdd(const TannerGraph& graph, const ComponentCode& code, double p,
                      int max_iters, uint64_t noise_seed,
                      const std::vector<uint8_t>* transmitted = nullptr);

struct PQEstimate {
    double p_hat = 0.0, q_hat = 0.0;
    double p_stderr = 0.0, q_stderr = 0.0;
    long trials = 0;
};

/// Monte Carlo estimate of P_n(i), Q_n(i) by direct BDD of random weight-i
/// patterns on the other n-1 positions.
PQEstimate empirical_pq(const ComponentCode& code, int i, long trials, uint64_t seed);

void write_sim_trace_csv(const SimTrace& trace, std::ostream& os);

} // namespace gldpc
