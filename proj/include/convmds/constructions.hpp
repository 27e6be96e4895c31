#ifndef CONVMDS_CONSTRUCTIONS_HPP
#define CONVMDS_CONSTRUCTIONS_HPP

#include "convmds/convcode.hpp"

namespace convmds {

// Parameters of the rate-1/2 polynomial construction: a primitive element
// alpha, the argument-scaling exponent s2 = ceil((q-1)/2) and the target
// degree delta = floor(2q/9).
struct ConstructionParams {
    const Field* field;
    Felt alpha;
    int s2;
    int delta;

    // Validates that alpha is primitive. Throws NotPrimitive.
    static ConstructionParams for_field(const Field& f, Felt alpha);
};

// The (2, 1, 2) code with entries g1 = (x - alpha)(x - alpha^2) and
// g2(x) = g1(x * alpha^(-s2)). Requires floor(2q/9) == 2, which holds for
// q in {9, 11, 12, 13}; other field sizes are rejected since the degree-2
// entry polynomial would no longer match delta.
ConvCode justesen_rate_half(const Field& f, Felt alpha);

// The (n, 1, 5) code with palindromic entry coefficients
// (G0, G1, G2, G2, G1, G0). G0 must be a nonzero row so the degree is 5.
ConvCode palindrome_lift(const std::vector<Felt>& g0, const std::vector<Felt>& g1,
                         const std::vector<Felt>& g2);

// The palindromic (2, 1, 5) code over F_11 with rows (8 8), (5 6), (1 1).
ConvCode theorem3_code();

// The family G0 + G1 D + G2 D^2 + G2 D^3 + a G1 D^4 + b G0 D^5 over F_11.
// (1, 1) gives the catastrophic palindromic code and is accepted so full
// sweeps can include it; the degree drops below 5 when b = 0.
ConvCode ab_family(Felt a, Felt b);

}  // namespace convmds

#endif
