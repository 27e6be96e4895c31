#include "convmds/constructions.hpp"

namespace convmds {

ConstructionParams ConstructionParams::for_field(const Field& f, Felt alpha) {
    if (&alpha.field() != &f) throw FieldMismatch("alpha from a different field");
    if (alpha.is_zero() || f.element_order(alpha.rep()) != f.q() - 1)
        throw NotPrimitive("alpha is not a primitive element");
    const int s2 = int((f.q() - 1 + 1) / 2);  // ceil((q-1)/2)
    const int delta = int(2 * f.q() / 9);
    return ConstructionParams{&f, alpha, s2, delta};
}

ConvCode justesen_rate_half(const Field& f, Felt alpha) {
    auto params = ConstructionParams::for_field(f, alpha);
    if (params.delta != 2)
        throw UnsupportedFieldSize("construction requires floor(2q/9) == 2");
    const Poly g1 = poly_from_roots(f, {alpha, alpha * alpha});
    const Poly g2 = g1.scale_arg(alpha.pow(-params.s2));
    return ConvCode::from_entries(f, 1, 2, {g1, g2});
}

ConvCode palindrome_lift(const std::vector<Felt>& g0, const std::vector<Felt>& g1,
                         const std::vector<Felt>& g2) {
    const size_t n = g0.size();
    if (n == 0 || g1.size() != n || g2.size() != n)
        throw BadDimensions("coefficient rows must be nonempty and of equal length");
    const Field& f = g0[0].field();
    bool lead_nonzero = false;
    for (Felt c : g0) lead_nonzero |= !c.is_zero();
    if (!lead_nonzero) throw ZeroLeadRow("G0 must be nonzero so the lifted degree is 5");

    std::vector<Poly> entries;
    entries.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        entries.push_back(Poly::from_felts(
            f, {g0[j], g1[j], g2[j], g2[j], g1[j], g0[j]}));
    }
    return ConvCode::from_entries(f, 1, int(n), std::move(entries));
}

ConvCode theorem3_code() {
    const Field& f = make_field(11);
    auto row = [&](int64_t a, int64_t b) {
        return std::vector<Felt>{f.element(uint32_t(a)), f.element(uint32_t(b))};
    };
    return palindrome_lift(row(8, 8), row(5, 6), row(1, 1));
}

ConvCode ab_family(Felt a, Felt b) {
    const Field& f = make_field(11);
    if (&a.field() != &f || &b.field() != &f)
        throw BadField("family parameters must be F_11 elements");
    const uint32_t g0[2] = {8, 8}, g1[2] = {5, 6}, g2[2] = {1, 1};
    std::vector<Poly> entries;
    for (int j = 0; j < 2; ++j) {
        entries.push_back(Poly::from_reps(
            f, {g0[j], g1[j], g2[j], g2[j], f.mul(a.rep(), g1[j]), f.mul(b.rep(), g0[j])}));
    }
    return ConvCode::from_entries(f, 1, 2, std::move(entries));
}

}  // namespace convmds
