#ifndef CONVMDS_POLY_HPP
#define CONVMDS_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convmds/gf.hpp"

namespace convmds {

// Univariate polynomial over a Field, coefficients ascending (index i is the
// coefficient of D^i). Always normalized: the trailing stored coefficient is
// nonzero, and the zero polynomial stores nothing.
//
// degree() of the zero polynomial is std::nullopt, which compares less than
// every defined degree — the usual -infinity convention without a magic -1.
class Poly {
  public:
    static Poly zero(const Field& f) { return Poly(&f, {}); }
    static Poly one(const Field& f) { return Poly(&f, {1}); }
    static Poly constant(Felt c) { return Poly(&c.field(), {c.rep()}); }

    // Coefficients as signed integers; must already be reduced to [0, q).
    static Poly from_ints(const Field& f, const std::vector<int64_t>& coeffs);
    // Coefficients as packed representatives (validated < q).
    static Poly from_reps(const Field& f, std::vector<uint32_t> reps);
    static Poly from_felts(const Field& f, const std::vector<Felt>& coeffs);

    const Field& field() const { return *f_; }
    const std::vector<uint32_t>& reps() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }

    // Packed coefficient of D^i; zero beyond the stored range.
    uint32_t rep_at(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Felt coeff(size_t i) const { return f_->element(rep_at(i)); }
    Felt leading() const;  // throws BadParameters on the zero polynomial

    int weight() const;  // number of nonzero coefficients

    Poly monic() const;
    // Reverse the coefficients after padding to the given degree:
    // D^d * f(1/D). Requires d >= deg f.
    Poly reversed(int up_to_degree) const;
    // f(beta * x): coefficient i is scaled by beta^i. beta must be nonzero.
    Poly scale_arg(Felt beta) const;
    Felt eval(Felt x) const;  // Horner

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(Felt s) const;
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.f_ == b.f_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const;  // "8 + 5D + D^2", "0"

  private:
    Poly(const Field* f, std::vector<uint32_t> c) : f_(f), c_(std::move(c)) { normalize(); }
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check_same_field(const Poly& a, const Poly& b);

    const Field* f_;
    std::vector<uint32_t> c_;
};

// Quotient and remainder of f by nonzero g: f = q*g + r with deg r < deg g.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);

// Monic greatest common divisor; gcd(f, 0) = monic(f). Throws BothZero.
Poly poly_gcd(const Poly& f, const Poly& g);

// Monic product of (x - r) over the given roots; empty list gives 1.
Poly poly_from_roots(const Field& f, const std::vector<Felt>& roots);

}  // namespace convmds

#endif
