#include "gldpc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "gldpc/errors.hpp"

namespace gldpc {

namespace {

struct RawEdge {
    int32_t bit;
    int8_t slot;
    int32_t constraint;
    int32_t socket;
    int32_t pairing;
};

TannerGraph assemble(const ComponentCode& code, int m, int L, int w, uint64_t seed) {
    const int n = code.n();
    const long mn = long(m) * n;
    if (mn % 2 != 0) throw config_error("graph sampling: m*n must be even");
    if (mn % w != 0) throw config_error("graph sampling: m*n must be divisible by w");

    std::mt19937_64 rng(seed);
    const int P = L + w - 1;
    const long bits_per_pos = mn / 2;
    const long group = mn / w;

    // per-position random partitions of the mn sockets into w groups
    auto partition = [&](int positions) {
        std::vector<std::vector<int32_t>> perms(static_cast<size_t>(positions));
        for (auto& perm : perms) {
            perm.resize(size_t(mn));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
        }
        return perms;
    };
    auto bit_perm = partition(L);
    auto con_perm = partition(P);

    // group (i,j) on the bit side matches group (i+j, w-1-j) on the
    // constraint side, elementwise
    std::vector<RawEdge> edges;
    edges.reserve(size_t(mn) * L);
    std::vector<std::vector<int32_t>> pairing_edges(size_t(L) * w);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < w; ++j) {
            int cpos = i + j;
            int cgroup = w - 1 - j;
            int32_t pid = int32_t(i * w + j);
            for (long e = 0; e < group; ++e) {
                int32_t bs = bit_perm[size_t(i)][size_t(j * group + e)];
                int32_t cs = con_perm[size_t(cpos)][size_t(cgroup * group + e)];
                RawEdge edge;
                edge.bit = int32_t(i * bits_per_pos + bs / 2);
                edge.slot = int8_t(bs % 2);
                edge.constraint = int32_t(cpos * long(m) + cs / n);
                edge.socket = int32_t(cs % n);
                edge.pairing = pid;
                pairing_edges[size_t(pid)].push_back(int32_t(edges.size()));
                edges.push_back(edge);
            }
        }
    }

    // resolve repeated-bit collisions inside a constraint by swapping the
    // bit side of the offending edge with another edge of the same pairing
    const int num_constraints = P * m;
    std::vector<std::vector<int32_t>> con_edges(static_cast<size_t>(num_constraints));
    for (size_t e = 0; e < edges.size(); ++e)
        con_edges[size_t(edges[e].constraint)].push_back(int32_t(e));

    std::vector<int32_t> seen(size_t(L) * size_t(bits_per_pos), -1);
    for (int pass = 0;; ++pass) {
        if (pass > 10000)
            throw numerical_error("graph sampling: could not resolve socket collisions");
        bool dirty = false;
        for (int c = 0; c < num_constraints; ++c) {
            for (int32_t e : con_edges[size_t(c)]) {
                int32_t b = edges[size_t(e)].bit;
                if (seen[size_t(b)] == c) {
                    // swap with a random edge of the same pairing
                    const auto& pool = pairing_edges[size_t(edges[size_t(e)].pairing)];
                    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
                    int32_t other = pool[pick(rng)];
                    std::swap(edges[size_t(e)].bit, edges[size_t(other)].bit);
                    std::swap(edges[size_t(e)].slot, edges[size_t(other)].slot);
                    dirty = true;
                } else {
                    seen[size_t(b)] = c;
                }
            }
            for (int32_t e : con_edges[size_t(c)]) seen[size_t(edges[size_t(e)].bit)] = -1;
        }
        if (!dirty) break;
    }

    TannerGraph g;
    g.n = n;
    g.m = m;
    g.L = L;
    g.w = w;
    g.seed = seed;
    g.bits.resize(size_t(L) * size_t(bits_per_pos));
    g.constraint_bits.assign(size_t(num_constraints) * size_t(n), -1);
    g.constraint_slot.assign(size_t(num_constraints) * size_t(n), -1);
    std::vector<int> filled(g.bits.size(), 0);
    for (const RawEdge& e : edges) {
        g.bits[size_t(e.bit)][size_t(e.slot)] = {e.constraint, e.socket};
        g.constraint_bits[size_t(e.constraint) * size_t(n) + size_t(e.socket)] = e.bit;
        g.constraint_slot[size_t(e.constraint) * size_t(n) + size_t(e.socket)] = e.slot;
        ++filled[size_t(e.bit)];
    }
    for (int f : filled)
        if (f != 2) throw numerical_error("graph sampling: bit degree != 2");
    return g;
}

} // namespace

TannerGraph sample_uncoupled_graph(const ComponentCode& code, int m, uint64_t seed) {
    return assemble(code, m, 1, 1, seed);
}

TannerGraph sample_coupled_graph(const ComponentCode& code, int m, CouplingProfile profile,
                                 uint64_t seed) {
    if (profile.L < 1 || profile.w < 1 || profile.w > profile.L)
        throw config_error("sample_coupled_graph: need 1 <= w <= L");
    return assemble(code, m, profile.L, profile.w, seed);
}

SimTrace simulate_hdd(const TannerGraph& graph, const ComponentCode& code, double p,
                      int max_iters, uint64_t noise_seed,
                      const std::vector<uint8_t>* transmitted) {
    if (graph.n != code.n()) throw config_error("simulate_hdd: graph/code mismatch");
    if (p < 0.0 || p > 1.0) throw config_error("simulate_hdd: p outside [0,1]");
    const int n = graph.n;
    const int nb = graph.num_bits();
    const int nc = graph.num_constraints();
    const int two_t = 2 * code.t();
    const FieldTable& f = code.field();

    std::vector<uint8_t> tx(size_t(nb), 0);
    if (transmitted) {
        if (int(transmitted->size()) != nb)
            throw config_error("simulate_hdd: transmitted length mismatch");
        tx = *transmitted;
    }

    SimTrace trace;
    trace.p = p;
    trace.graph_seed = graph.seed;
    trace.noise_seed = noise_seed;

    std::mt19937_64 rng(noise_seed);
    std::bernoulli_distribution flip(p);
    std::vector<uint8_t> r(static_cast<size_t>(nb));
    for (int b = 0; b < nb; ++b) r[size_t(b)] = uint8_t(tx[size_t(b)] ^ (flip(rng) ? 1 : 0));

    // alpha^{k j} lookup, j = 1..2t
    std::vector<uint32_t> powkj(size_t(n) * size_t(two_t));
    for (int k = 0; k < n; ++k)
        for (int j = 1; j <= two_t; ++j)
            powkj[size_t(k) * size_t(two_t) + size_t(j - 1)] = f.alpha_pow(long(k) * j);

    std::vector<uint8_t> cur(size_t(nb) * 2), next(size_t(nb) * 2);
    for (int b = 0; b < nb; ++b) cur[size_t(b) * 2] = cur[size_t(b) * 2 + 1] = r[size_t(b)];

    std::vector<uint8_t> inc(size_t(nc) * size_t(n));
    std::vector<uint32_t> synd(size_t(nc) * size_t(two_t));
    std::vector<uint8_t> parity(static_cast<size_t>(nc));
    std::vector<uint32_t> synd_buf(static_cast<size_t>(two_t));
    BddWorkspace ws(code);

    const int bits_per_pos = graph.m * graph.n / 2;
    auto stats_for = [&](const std::vector<uint8_t>& msgs) {
        SimTrace::IterStats st;
        st.per_position.assign(size_t(graph.L), 0);
        for (int b = 0; b < nb; ++b) {
            int errs = (msgs[size_t(b) * 2] != tx[size_t(b)]) +
                       (msgs[size_t(b) * 2 + 1] != tx[size_t(b)]);
            st.message_errors += errs;
            st.per_position[size_t(b / bits_per_pos)] += errs;
            uint8_t est = uint8_t((msgs[size_t(b) * 2] + msgs[size_t(b) * 2 + 1] +
                                   r[size_t(b)]) >= 2);
            st.bit_errors += est != tx[size_t(b)];
        }
        return st;
    };
    trace.iters.push_back(stats_for(cur));

    int iter = 0;
    for (; iter < max_iters; ++iter) {
        if (trace.iters.back().message_errors == 0) break;

        // constraint-side state from the current messages
        std::fill(synd.begin(), synd.end(), 0u);
        std::fill(parity.begin(), parity.end(), uint8_t(0));
        for (int c = 0; c < nc; ++c) {
            for (int k = 0; k < n; ++k) {
                int32_t b = graph.constraint_bits[size_t(c) * size_t(n) + size_t(k)];
                if (b < 0) continue; // shortened socket at the chain boundary: known zero
                int8_t slot = graph.constraint_slot[size_t(c) * size_t(n) + size_t(k)];
                uint8_t v = cur[size_t(b) * 2 + size_t(slot)];
                inc[size_t(c) * size_t(n) + size_t(k)] = v;
                if (v) {
                    parity[size_t(c)] ^= 1;
                    const uint32_t* row = &powkj[size_t(k) * size_t(two_t)];
                    uint32_t* s = &synd[size_t(c) * size_t(two_t)];
                    for (int j = 0; j < two_t; ++j) s[j] ^= row[j];
                }
            }
        }

        // extrinsic update: the message along edge s is decoded at the other
        // constraint with the bit's own socket forced to the channel value
        for (int b = 0; b < nb; ++b) {
            for (int s = 0; s < 2; ++s) {
                const auto& ep = graph.bits[size_t(b)][size_t(1 - s)];
                int c = ep.constraint, k = ep.socket;
                const uint32_t* base = &synd[size_t(c) * size_t(two_t)];
                uint8_t par = parity[size_t(c)];
                std::copy(base, base + two_t, synd_buf.begin());
                if (r[size_t(b)] != inc[size_t(c) * size_t(n) + size_t(k)]) {
                    const uint32_t* row = &powkj[size_t(k) * size_t(two_t)];
                    for (int j = 0; j < two_t; ++j) synd_buf[size_t(j)] ^= row[j];
                    par ^= 1;
                }
                next[size_t(b) * 2 + size_t(s)] =
                    ws.decode_bit(synd_buf, k, r[size_t(b)], par);
            }
        }

        bool changed = next != cur;
        std::swap(cur, next);
        trace.iters.push_back(stats_for(cur));
        if (trace.iters.back().message_errors == 0) {
            ++iter;
            break;
        }
        if (!changed) {
            trace.verdict = SimTrace::Verdict::failure;
            trace.iterations_used = iter + 1;
            return trace;
        }
    }
    trace.iterations_used = iter;
    trace.verdict = trace.iters.back().message_errors == 0 ? SimTrace::Verdict::success
                                                           : SimTrace::Verdict::cap;
    return trace;
}

PQEstimate empirical_pq(const ComponentCode& code, int i, long trials, uint64_t seed) {
    const int n = code.n();
    if (i < 0 || i > n - 1) throw config_error("empirical_pq: i outside [0, n-1]");
    if (trials < 1) throw config_error("empirical_pq: trials must be >= 1");
    const int two_t = 2 * code.t();
    const FieldTable& f = code.field();

    std::mt19937_64 rng(seed);
    std::vector<int> pos(static_cast<size_t>(n));
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<uint32_t> synd(static_cast<size_t>(two_t));
    BddWorkspace ws(code);

    long p_err = 0, q_err = 0;
    for (long tr = 0; tr < trials; ++tr) {
        // first i+1 entries after a partial shuffle: uniformly random
        // distinct positions; pos[0] is the observed bit
        for (int j = 0; j <= i; ++j) {
            std::uniform_int_distribution<int> pick(j, n - 1);
            std::swap(pos[size_t(j)], pos[size_t(pick(rng))]);
        }

        // Q case: observed bit correct, errors at pos[1..i]
        std::fill(synd.begin(), synd.end(), 0u);
        for (int j = 1; j <= i; ++j)
            for (int l = 1; l <= two_t; ++l)
                synd[size_t(l - 1)] ^= f.alpha_pow(long(pos[size_t(j)]) * l);
        if (ws.decode_bit(synd, pos[0], 0, i & 1) != 0) ++q_err;

        // P case: observed bit also in error (total weight i+1)
        for (int l = 1; l <= two_t; ++l)
            synd[size_t(l - 1)] ^= f.alpha_pow(long(pos[0]) * l);
        if (ws.decode_bit(synd, pos[0], 1, (i + 1) & 1) != 0) ++p_err;
    }

    PQEstimate est;
    est.trials = trials;
    est.p_hat = double(p_err) / double(trials);
    est.q_hat = double(q_err) / double(trials);
    est.p_stderr = std::sqrt(est.p_hat * (1.0 - est.p_hat) / double(trials));
    est.q_stderr = std::sqrt(est.q_hat * (1.0 - est.q_hat) / double(trials));
    return est;
}

void write_sim_trace_csv(const SimTrace& trace, std::ostream& os) {
    os << "iteration,position,message_errors,bit_errors\n";
    for (size_t it = 0; it < trace.iters.size(); ++it) {
        const auto& st = trace.iters[it];
        for (size_t pos = 0; pos < st.per_position.size(); ++pos)
            os << it << "," << (pos + 1) << "," << st.per_position[pos] << ","
               << (pos == 0 ? st.bit_errors : 0) << "\n";
    }
}

} // namespace gldpc
