#ifndef CONVMDS_GF_HPP
#define CONVMDS_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "convmds/errors.hpp"

namespace convmds {

class Felt;

// A finite field F_q with q = p^m, q <= 2^20. Elements are carried as packed
// canonical representatives in [0, q): for m = 1 the residue itself, for
// m > 1 the base-p digits are the coefficients of the polynomial
// representative (constant term = least significant digit).
//
// Instances are interned (see make_field) and immutable, so raw pointers to
// them stay valid for the lifetime of the program and the tables can be
// shared freely across threads.
class Field {
  public:
    static constexpr uint64_t kMaxQ = 1u << 20;

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }

    // Modulus coefficients, ascending, length m + 1, monic. Empty for m = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Felt element(uint32_t rep) const;
    Felt from_coeffs(const std::vector<uint32_t>& coeffs) const;  // m digits over [0, p)
    Felt zero() const;
    Felt one() const;

    std::vector<uint32_t> coeff_tuple(uint32_t rep) const;  // length m

    // Raw arithmetic on packed representatives. These are the hot-path
    // entry points; arguments must be < q.
    uint32_t add(uint32_t a, uint32_t b) const {
        if (!add_tab_.empty()) return add_tab_[size_t(a) * q_ + b];
        if (m_ == 1) {
            uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_generic(a, b);
    }
    uint32_t neg(uint32_t a) const { return neg_tab_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_tab_[b]); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (!mul_tab_.empty()) return mul_tab_[size_t(a) * q_ + b];
        if (a == 0 || b == 0) return 0;
        uint32_t e = log_tab_[a] + log_tab_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_tab_[e];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return inv_tab_[a];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, int64_t e) const;

    // Smallest e >= 1 with a^e = 1; divides q - 1.
    uint32_t element_order(uint32_t a) const;

    // All elements of multiplicative order q - 1, ascending packed order.
    std::vector<Felt> primitive_elements() const;

    std::string name() const;  // "F_11", "F_9"
    std::string description() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t add_generic(uint32_t a, uint32_t b) const;
    uint32_t slow_mul(uint32_t a, uint32_t b) const;
    uint32_t slow_pow(uint32_t a, uint64_t e) const;
    void build_tables();

    uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;   // ascending, monic, empty for m = 1
    std::vector<uint32_t> pow_p_;     // p^0 .. p^m
    std::vector<uint32_t> exp_tab_;   // g^i for a fixed generator g, size q - 1
    std::vector<uint32_t> log_tab_;   // inverse of exp_tab_, log_tab_[1] = 0
    std::vector<uint32_t> neg_tab_;
    std::vector<uint32_t> inv_tab_;   // inv_tab_[0] unused
    std::vector<uint16_t> add_tab_;   // dense q x q tables for small fields
    std::vector<uint16_t> mul_tab_;

    friend struct FieldFactory;
};

// Returns the interned field F_{p^m}. For m > 1 the modulus is the first
// monic irreducible of degree m in ascending order of packed coefficient
// tuples (constant term varies fastest), so repeated calls agree run to run.
// Throws NotPrime, BadParameters and Overflow (p^m > 2^20).
const Field& make_field(uint32_t p, uint32_t m = 1);

// Same, with an explicit monic irreducible modulus (degree m >= 2).
const Field& make_field(uint32_t p, const std::vector<uint32_t>& modulus);

// A single field element: a packed representative tied to its field.
// Arithmetic between elements of different fields throws FieldMismatch.
class Felt {
  public:
    const Field& field() const { return *f_; }
    uint32_t rep() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Felt operator-() const { return Felt(f_, f_->neg(v_)); }
    Felt inv() const { return Felt(f_, f_->inv(v_)); }
    Felt pow(int64_t e) const { return Felt(f_, f_->pow(v_, e)); }

    friend Felt operator+(Felt a, Felt b) { check(a, b); return Felt(a.f_, a.f_->add(a.v_, b.v_)); }
    friend Felt operator-(Felt a, Felt b) { check(a, b); return Felt(a.f_, a.f_->sub(a.v_, b.v_)); }
    friend Felt operator*(Felt a, Felt b) { check(a, b); return Felt(a.f_, a.f_->mul(a.v_, b.v_)); }
    friend Felt operator/(Felt a, Felt b) { check(a, b); return Felt(a.f_, a.f_->div(a.v_, b.v_)); }

    friend bool operator==(Felt a, Felt b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend bool operator!=(Felt a, Felt b) { return !(a == b); }

  private:
    Felt(const Field* f, uint32_t v) : f_(f), v_(v) {}
    static void check(Felt a, Felt b) {
        if (a.f_ != b.f_) throw FieldMismatch("operands belong to different fields");
    }

    const Field* f_;
    uint32_t v_;

    friend class Field;
};

inline uint32_t element_order(Felt a) { return a.field().element_order(a.rep()); }

uint64_t euler_phi(uint64_t n);

}  // namespace convmds

#endif
