#include "convmds/distance.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace convmds {

namespace {

constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();

// Controller canonical form of a rate-1/n encoder: the state is the last
// `mem` input symbols (most recent first), mem = max entry degree = delta.
// States are packed base-q integers with the most recent symbol in the least
// significant digit.
struct Trellis {
    const Field& F;
    uint32_t q;
    int n;
    int mem;
    uint64_t num_states;       // q^mem
    uint64_t shift_mod;        // q^(mem-1), 1 when mem <= 1
    std::vector<uint32_t> g;   // g[i*n + j]: coefficient of D^i in entry j

    Trellis(const ConvCode& code, uint64_t state_cap) : F(code.field()), q(F.q()) {
        if (code.k() != 1) throw UnsupportedK("trellis search supports k = 1 only");
        n = code.n();
        mem = code.degree();
        num_states = 1;
        for (int i = 0; i < mem; ++i) {
            if (num_states > state_cap / q)
                throw StateSpaceTooLarge("q^delta exceeds the configured state cap");
            num_states *= q;
        }
        if (num_states > state_cap)
            throw StateSpaceTooLarge("q^delta exceeds the configured state cap");
        shift_mod = mem >= 1 ? num_states / q : 1;
        g.assign(size_t(mem + 1) * n, 0);
        for (int i = 0; i <= mem; ++i)
            for (int j = 0; j < n; ++j) g[size_t(i) * n + j] = code.entry(0, j).rep_at(i);
    }

    uint64_t next_state(uint64_t s, uint32_t u) const { return u + q * (s % shift_mod); }

    // Output contribution of the state memory alone (input term excluded).
    void state_contrib(uint64_t s, uint32_t* c) const {
        for (int j = 0; j < n; ++j) c[j] = 0;
        for (int i = 1; i <= mem; ++i) {
            uint32_t digit = uint32_t(s % q);
            s /= q;
            if (digit != 0)
                for (int j = 0; j < n; ++j) c[j] = F.add(c[j], F.mul(digit, g[size_t(i) * n + j]));
        }
    }

    uint32_t edge_weight(const uint32_t* c, uint32_t u) const {
        uint32_t w = 0;
        for (int j = 0; j < n; ++j) w += F.add(F.mul(u, g[j]), c[j]) != 0;
        return w;
    }
};

// Shortest (weight, length) pair from every state to the all-zero state,
// lexicographic order. Lengths break weight ties, which keeps the search
// well-founded in the presence of the zero-weight cycles a catastrophic
// encoder produces.
void reverse_dijkstra(const Trellis& tr, std::vector<uint32_t>& dw, std::vector<uint32_t>& dl) {
    dw.assign(tr.num_states, kInf);
    dl.assign(tr.num_states, kInf);
    using Item = std::tuple<uint32_t, uint32_t, uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dw[0] = 0;
    dl[0] = 0;
    pq.emplace(0, 0, 0);

    std::vector<uint32_t> base(tr.n);
    while (!pq.empty()) {
        auto [w, l, t] = pq.top();
        pq.pop();
        if (w != dw[t] || l != dl[t]) continue;

        // Predecessors of t: drop its most recent symbol u, append any oldest
        // symbol x. The connecting edge consumed u and produced
        // u*G_0 + (digits of t/q)*G_1..G_{mem-1} + x*G_mem.
        const uint32_t u = uint32_t(t % tr.q);
        const uint64_t r = t / tr.q;
        for (int j = 0; j < tr.n; ++j) base[j] = tr.F.mul(u, tr.g[j]);
        uint64_t rr = r;
        for (int i = 1; i < tr.mem; ++i) {
            uint32_t digit = uint32_t(rr % tr.q);
            rr /= tr.q;
            if (digit != 0)
                for (int j = 0; j < tr.n; ++j)
                    base[j] = tr.F.add(base[j], tr.F.mul(digit, tr.g[size_t(i) * tr.n + j]));
        }
        for (uint32_t x = 0; x < tr.q; ++x) {
            uint32_t ew = 0;
            for (int j = 0; j < tr.n; ++j)
                ew += tr.F.add(base[j], tr.F.mul(x, tr.g[size_t(tr.mem) * tr.n + j])) != 0;
            const uint64_t s = r + uint64_t(x) * tr.shift_mod;
            const uint32_t cw = w + ew, cl = l + 1;
            if (cw < dw[s] || (cw == dw[s] && cl < dl[s])) {
                dw[s] = cw;
                dl[s] = cl;
                pq.emplace(cw, cl, s);
            }
        }
    }
}

}  // namespace

DistanceReport free_distance(const ConvCode& code, const SearchLimits& limits) {
    const Field& F = code.field();
    const Trellis tr(code, limits.state_cap);
    const int bound = singleton_bound(tr.n, 1, tr.mem);

    std::vector<uint32_t> seq;
    uint32_t best_w = kInf;

    if (tr.mem == 0) {
        // Memoryless code: every nonzero input symbol is already a closed path.
        uint32_t best_u = 0;
        for (uint32_t u = 1; u < tr.q; ++u) {
            uint32_t w = 0;
            for (int j = 0; j < tr.n; ++j) w += F.mul(u, tr.g[j]) != 0;
            if (w < best_w) {
                best_w = w;
                best_u = u;
            }
        }
        seq.push_back(best_u);
    } else {
        std::vector<uint32_t> dw, dl;
        reverse_dijkstra(tr, dw, dl);

        uint32_t best_l = kInf;
        std::vector<uint32_t> c(tr.n, 0);
        for (uint32_t u = 1; u < tr.q; ++u) {
            const uint64_t t = tr.next_state(0, u);
            if (dw[t] == kInf) throw InternalInconsistency("unreachable trellis state");
            const uint32_t w = tr.edge_weight(c.data(), u) + dw[t];
            const uint32_t l = 1 + dl[t];
            if (w < best_w || (w == best_w && l < best_l)) {
                best_w = w;
                best_l = l;
            }
        }

        // Walk forward, at each step taking the smallest input symbol that
        // still completes an optimal (weight, length) path. The remaining
        // budget always equals the reverse distance of the current state.
        uint64_t state = 0;
        uint32_t rw = best_w, rl = best_l;
        seq.reserve(best_l);
        for (uint32_t step = 0; step < best_l; ++step) {
            tr.state_contrib(state, c.data());
            bool chosen = false;
            for (uint32_t u = (step == 0 ? 1 : 0); u < tr.q; ++u) {
                const uint32_t ew = tr.edge_weight(c.data(), u);
                const uint64_t t = tr.next_state(state, u);
                if (ew <= rw && rw - ew == dw[t] && rl - 1 == dl[t]) {
                    seq.push_back(u);
                    rw -= ew;
                    rl -= 1;
                    state = t;
                    chosen = true;
                    break;
                }
            }
            if (!chosen) throw InternalInconsistency("witness reconstruction failed");
        }
        if (state != 0 || rw != 0 || rl != 0)
            throw InternalInconsistency("witness path does not close at the zero state");
    }

    DistanceReport rep{0, Poly::from_reps(F, seq), {}, bound, false};
    rep.witness_codeword = encode(code, rep.witness_input);
    rep.d_free = codeword_weight(rep.witness_codeword);
    if (rep.d_free != int(best_w))
        throw InternalInconsistency("re-encoded witness weight disagrees with the search");
    rep.is_mds = rep.d_free == rep.bound;
    return rep;
}

OracleReport brute_force_min_weight(const ConvCode& code, int max_input_degree,
                                    const SearchLimits& limits) {
    if (code.k() != 1) throw UnsupportedK("oracle enumeration supports k = 1 only");
    if (max_input_degree < 0) throw BadParameters("max input degree must be >= 0");
    const Field& F = code.field();
    const uint32_t q = F.q();
    uint64_t total = 1;
    for (int i = 0; i <= max_input_degree; ++i) {
        if (total > limits.enum_budget / q)
            throw BudgetExceeded("q^(max_input_degree+1) exceeds the enumeration budget");
        total *= q;
    }

    const int n = code.n();
    const int mem = code.degree();
    std::vector<uint32_t> g(size_t(mem + 1) * n);
    for (int i = 0; i <= mem; ++i)
        for (int j = 0; j < n; ++j) g[size_t(i) * n + j] = code.entry(0, j).rep_at(i);

    const int out_len = max_input_degree + mem + 1;
    std::vector<uint32_t> v(size_t(n) * out_len, 0);  // v[j*out_len + t]
    std::vector<uint32_t> u(size_t(max_input_degree) + 1, 0);
    int best = std::numeric_limits<int>::max();
    std::vector<uint32_t> best_u;

    // Depth-first over input coefficient tuples in ascending lexicographic
    // order (u_0 most significant, nonzero). Column t of the output is final
    // once u_t is placed, so branches whose finalized weight already reaches
    // the best known minimum cannot improve and are cut.
    auto dfs = [&](auto&& self, int t, int finalized) -> void {
        for (uint32_t cand = (t == 0 ? 1 : 0); cand < q; ++cand) {
            u[t] = cand;
            if (cand != 0)
                for (int i = 0; i <= mem; ++i)
                    for (int j = 0; j < n; ++j) {
                        uint32_t& cell = v[size_t(j) * out_len + t + i];
                        cell = F.add(cell, F.mul(cand, g[size_t(i) * n + j]));
                    }
            int colw = 0;
            for (int j = 0; j < n; ++j) colw += v[size_t(j) * out_len + t] != 0;
            const int nf = finalized + colw;
            if (nf < best) {
                if (t == max_input_degree) {
                    int tail = 0;
                    for (int s = t + 1; s < out_len; ++s)
                        for (int j = 0; j < n; ++j) tail += v[size_t(j) * out_len + s] != 0;
                    if (nf + tail < best) {
                        best = nf + tail;
                        best_u.assign(u.begin(), u.end());
                    }
                } else {
                    self(self, t + 1, nf);
                }
            }
            if (cand != 0)
                for (int i = 0; i <= mem; ++i)
                    for (int j = 0; j < n; ++j) {
                        uint32_t& cell = v[size_t(j) * out_len + t + i];
                        cell = F.sub(cell, F.mul(cand, g[size_t(i) * n + j]));
                    }
        }
        u[t] = 0;
    };
    dfs(dfs, 0, 0);

    return OracleReport{best, Poly::from_reps(F, best_u)};
}

WindowReport window_min_weight(const ConvCode& code, int window_len, const SearchLimits& limits) {
    if (code.k() != 1) throw UnsupportedK("window enumeration supports k = 1 only");
    if (window_len < 0) throw BadParameters("window length must be >= 0");
    const Field& F = code.field();
    const uint32_t q = F.q();
    uint64_t total = 1;
    for (int i = 0; i <= window_len; ++i) {
        if (total > limits.enum_budget / q)
            throw BudgetExceeded("q^(window_len+1) exceeds the enumeration budget");
        total *= q;
    }

    const int n = code.n();
    const int mem = code.degree();
    std::vector<uint32_t> g(size_t(mem + 1) * n);
    for (int i = 0; i <= mem; ++i)
        for (int j = 0; j < n; ++j) g[size_t(i) * n + j] = code.entry(0, j).rep_at(i);

    std::vector<uint32_t> u(size_t(window_len) + 1, 0);
    int best = std::numeric_limits<int>::max();
    std::vector<uint32_t> best_u;

    auto dfs = [&](auto&& self, int t, int acc) -> void {
        const int span = std::min(t, mem);
        for (uint32_t cand = (t == 0 ? 1 : 0); cand < q; ++cand) {
            u[t] = cand;
            int colw = 0;
            for (int j = 0; j < n; ++j) {
                uint32_t x = 0;
                for (int i = 0; i <= span; ++i)
                    x = F.add(x, F.mul(u[t - i], g[size_t(i) * n + j]));
                colw += x != 0;
            }
            const int na = acc + colw;
            if (na < best) {
                if (t == window_len) {
                    best = na;
                    best_u.assign(u.begin(), u.end());
                } else {
                    self(self, t + 1, na);
                }
            }
        }
        u[t] = 0;
    };
    dfs(dfs, 0, 0);

    WindowReport rep{best, {}};
    rep.witness_prefix.reserve(best_u.size());
    for (uint32_t r : best_u) rep.witness_prefix.push_back(F.element(r));
    return rep;
}

bool is_mds(const ConvCode& code, const SearchLimits& limits) {
    return free_distance(code, limits).is_mds;
}

}  // namespace convmds
