#include "convmds/poly.hpp"

#include <algorithm>

namespace convmds {

void Poly::check_same_field(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw FieldMismatch("polynomials over different fields");
}

Poly Poly::from_ints(const Field& f, const std::vector<int64_t>& coeffs) {
    std::vector<uint32_t> reps;
    reps.reserve(coeffs.size());
    for (int64_t c : coeffs) {
        if (c < 0 || uint64_t(c) >= f.q())
            throw BadCoefficient("coefficient " + std::to_string(c) + " out of range [0, q)");
        reps.push_back(uint32_t(c));
    }
    return Poly(&f, std::move(reps));
}

Poly Poly::from_reps(const Field& f, std::vector<uint32_t> reps) {
    for (uint32_t c : reps)
        if (c >= f.q()) throw BadCoefficient("coefficient out of range [0, q)");
    return Poly(&f, std::move(reps));
}

Poly Poly::from_felts(const Field& f, const std::vector<Felt>& coeffs) {
    std::vector<uint32_t> reps;
    reps.reserve(coeffs.size());
    for (Felt c : coeffs) {
        if (&c.field() != &f) throw FieldMismatch("coefficient from a different field");
        reps.push_back(c.rep());
    }
    return Poly(&f, std::move(reps));
}

Felt Poly::leading() const {
    if (c_.empty()) throw BadParameters("zero polynomial has no leading coefficient");
    return f_->element(c_.back());
}

int Poly::weight() const {
    int w = 0;
    for (uint32_t c : c_) w += (c != 0);
    return w;
}

Poly Poly::monic() const {
    if (c_.empty()) throw BadParameters("cannot normalize the zero polynomial to monic");
    if (c_.back() == 1) return *this;
    uint32_t scale = f_->inv(c_.back());
    std::vector<uint32_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = f_->mul(c_[i], scale);
    return Poly(f_, std::move(out));
}

Poly Poly::reversed(int up_to_degree) const {
    if (up_to_degree < 0 || (degree() && *degree() > up_to_degree))
        throw BadParameters("reversal degree smaller than the polynomial degree");
    std::vector<uint32_t> out(size_t(up_to_degree) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[up_to_degree - i] = c_[i];
    return Poly(f_, std::move(out));
}

Poly Poly::scale_arg(Felt beta) const {
    if (&beta.field() != f_) throw FieldMismatch("scale factor from a different field");
    if (beta.is_zero()) throw ZeroScale("argument scaling by zero would collapse the degree");
    std::vector<uint32_t> out(c_.size());
    uint32_t power = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        out[i] = f_->mul(c_[i], power);
        power = f_->mul(power, beta.rep());
    }
    return Poly(f_, std::move(out));
}

Felt Poly::eval(Felt x) const {
    if (&x.field() != f_) throw FieldMismatch("evaluation point from a different field");
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x.rep()), c_[i]);
    return f_->element(acc);
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same_field(a, b);
    const Field& f = *a.f_;
    std::vector<uint32_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.rep_at(i), b.rep_at(i));
    return Poly(a.f_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::check_same_field(a, b);
    const Field& f = *a.f_;
    std::vector<uint32_t> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.rep_at(i), b.rep_at(i));
    return Poly(a.f_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(*a.f_);
    const Field& f = *a.f_;
    std::vector<uint32_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.f_, std::move(out));
}

Poly Poly::operator*(Felt s) const {
    if (&s.field() != f_) throw FieldMismatch("scalar from a different field");
    std::vector<uint32_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = f_->mul(c_[i], s.rep());
    return Poly(f_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<uint32_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = f_->neg(c_[i]);
    return Poly(f_, std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (&f.field() != &g.field()) throw FieldMismatch("polynomials over different fields");
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& F = f.field();
    const int dg = *g.degree();
    std::vector<uint32_t> rem = f.reps();
    if (!f.degree() || *f.degree() < dg)
        return {Poly::zero(F), f};
    std::vector<uint32_t> quot(f.reps().size() - dg, 0);
    const uint32_t lead_inv = F.inv(g.reps().back());
    for (size_t top = rem.size(); top-- > size_t(dg);) {
        uint32_t c = F.mul(rem[top], lead_inv);
        if (c == 0) continue;
        quot[top - dg] = c;
        for (int i = 0; i <= dg; ++i)
            rem[top - dg + i] = F.sub(rem[top - dg + i], F.mul(c, g.reps()[i]));
    }
    return {Poly::from_reps(F, std::move(quot)), Poly::from_reps(F, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (&f.field() != &g.field()) throw FieldMismatch("polynomials over different fields");
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

Poly poly_from_roots(const Field& f, const std::vector<Felt>& roots) {
    Poly acc = Poly::one(f);
    for (Felt r : roots) {
        if (&r.field() != &f) throw FieldMismatch("root from a different field");
        acc = acc * Poly::from_reps(f, {f.neg(r.rep()), 1});
    }
    return acc;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]);
            out += "D";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace convmds
