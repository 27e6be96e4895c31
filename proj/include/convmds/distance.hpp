#ifndef CONVMDS_DISTANCE_HPP
#define CONVMDS_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "convmds/convcode.hpp"

namespace convmds {

struct SearchLimits {
    uint64_t state_cap = uint64_t(1) << 24;   // max q^delta for the trellis search
    uint64_t enum_budget = uint64_t(1) << 27; // max q^(len+1) for exhaustive enumerations
};

struct DistanceReport {
    int d_free;
    Poly witness_input;                // a minimizing u(D)
    std::vector<Poly> witness_codeword;
    int bound;                         // generalized Singleton bound
    bool is_mds;                       // d_free == bound
};

// Exact free distance of a rate-1/n code: the minimum-weight closed path on
// the q^delta-state encoder graph that leaves the all-zero state with a
// nonzero input symbol and returns to it. Edge weights are the Hamming
// weights of the n output symbols; zero-weight edges (catastrophic encoders)
// are handled by a nonnegative-weight shortest-path search.
//
// The witness is deterministic: minimum weight, then fewest transitions,
// then lexicographically smallest input sequence over the canonical reps.
DistanceReport free_distance(const ConvCode& code, const SearchLimits& limits = {});

struct OracleReport {
    int min_weight;
    Poly witness;
};

// Independent check by direct enumeration: minimum of
// codeword_weight(encode(u)) over all u with deg u <= max_input_degree and
// u_0 != 0 (weight is shift-invariant, so anchoring u_0 loses nothing).
// Returns the first witness in lexicographic enumeration order. Upper bound
// on d_free for any cap; equal once the cap is large enough.
OracleReport brute_force_min_weight(const ConvCode& code, int max_input_degree,
                                    const SearchLimits& limits = {});

struct WindowReport {
    int min_weight;
    std::vector<Felt> witness_prefix;
};

// Minimum over all input prefixes (u_0, ..., u_L) with u_0 != 0 of the
// weight of the output coefficients v_0..v_L.
WindowReport window_min_weight(const ConvCode& code, int window_len,
                               const SearchLimits& limits = {});

bool is_mds(const ConvCode& code, const SearchLimits& limits = {});

}  // namespace convmds

#endif
