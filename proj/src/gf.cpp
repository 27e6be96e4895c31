#include "convmds/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace convmds {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; uint64_t(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomial helpers over Z_p, used only while constructing a field
// (modulus search and validation). Coefficients ascending.
using ZPoly = std::vector<uint32_t>;

void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g.
ZPoly zp_mod(ZPoly f, const ZPoly& g, uint32_t p) {
    zp_trim(f);
    while (f.size() >= g.size()) {
        uint32_t c = f.back();
        size_t shift = f.size() - g.size();
        if (c != 0) {
            for (size_t i = 0; i < g.size(); ++i) {
                uint64_t sub = (uint64_t(c) * g[i]) % p;
                f[shift + i] = uint32_t((f[shift + i] + p - sub) % p);
            }
        }
        f.pop_back();
        zp_trim(f);
        if (f.size() < g.size()) break;
    }
    return f;
}

// Unpack idx into its base-p digits, lowest first, fixed length.
ZPoly zp_unpack(uint64_t idx, uint32_t p, size_t len) {
    ZPoly out(len);
    for (size_t i = 0; i < len; ++i) {
        out[i] = uint32_t(idx % p);
        idx /= p;
    }
    return out;
}

// Exhaustive trial division by every monic polynomial of degree 1 .. m/2.
bool zp_irreducible(const ZPoly& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 1) return true;
    for (size_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            ZPoly g = zp_unpack(idx, p, d);
            g.push_back(1);  // monic
            if (zp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// First monic irreducible of degree m over Z_p, ascending packed order of
// the lower coefficients.
ZPoly canonical_modulus(uint32_t p, uint32_t m) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        ZPoly f = zp_unpack(idx, p, m);
        f.push_back(1);
        if (zp_irreducible(f, p)) return f;
    }
    throw InternalInconsistency("no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw BadParameters("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw Overflow("field size p^m exceeds the 2^20 table limit");
    }
    q_ = uint32_t(q);

    if (m_ == 1) {
        if (!modulus_.empty()) throw BadModulus("prime field takes no modulus");
    } else {
        if (modulus_.size() != m_ + 1) throw BadModulus("modulus must have degree m");
        if (modulus_.back() != 1) throw BadModulus("modulus must be monic");
        for (uint32_t c : modulus_)
            if (c >= p_) throw BadModulus("modulus coefficient out of range [0, p)");
        if (!zp_irreducible(modulus_, p_)) throw BadModulus("modulus is reducible over F_p");
    }

    pow_p_.resize(m_ + 1);
    pow_p_[0] = 1;
    for (uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    build_tables();
}

uint32_t Field::add_generic(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = (a / pow_p_[i]) % p_;
        uint32_t db = (b / pow_p_[i]) % p_;
        uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * pow_p_[i];
    }
    return out;
}

uint32_t Field::slow_mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return uint32_t((uint64_t(a) * b) % p_);
    // Schoolbook product of the digit polynomials, reduced mod modulus_.
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = (a / pow_p_[i]) % p_;
        if (da == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) {
            uint32_t db = (b / pow_p_[j]) % p_;
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(da) * db) % p_);
        }
    }
    for (size_t d = prod.size(); d-- > m_;) {
        uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint64_t sub = (uint64_t(c) * modulus_[i]) % p_;
            prod[d - m_ + i] = uint32_t((prod[d - m_ + i] + p_ - sub) % p_);
        }
    }
    uint32_t out = 0;
    for (uint32_t i = 0; i < m_; ++i) out += prod[i] * pow_p_[i];
    return out;
}

uint32_t Field::slow_pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    // Find a generator of the multiplicative group: smallest packed rep whose
    // order is q - 1 (checked against the prime factors of q - 1).
    const uint64_t group = q_ - 1;
    const auto factors = prime_factors(group);
    uint32_t gen = 0;
    for (uint32_t c = 1; c < q_; ++c) {
        bool ok = true;
        for (uint64_t r : factors) {
            if (slow_pow(c, group / r) == 1) { ok = false; break; }
        }
        if (ok) { gen = c; break; }
    }
    if (gen == 0 && q_ > 2) throw InternalInconsistency("no generator found");
    if (q_ == 2) gen = 1;

    exp_tab_.resize(group);
    log_tab_.assign(q_, 0);
    uint32_t acc = 1;
    for (uint64_t i = 0; i < group; ++i) {
        exp_tab_[i] = acc;
        log_tab_[acc] = uint32_t(i);
        acc = slow_mul(acc, gen);
    }

    neg_tab_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
        uint32_t out = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t d = (a / pow_p_[i]) % p_;
            out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
        }
        neg_tab_[a] = out;
    }

    inv_tab_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
        uint32_t e = log_tab_[a];
        inv_tab_[a] = exp_tab_[(group - e) % group];
    }

    // Dense 2D tables keep the trellis and enumeration loops to one lookup
    // per operation; only worth the memory for small fields.
    if (q_ <= 256) {
        add_tab_.resize(size_t(q_) * q_);
        mul_tab_.resize(size_t(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a) {
            for (uint32_t b = 0; b < q_; ++b) {
                add_tab_[size_t(a) * q_ + b] = uint16_t(add_generic(a, b));
                mul_tab_[size_t(a) * q_ + b] = uint16_t(slow_mul(a, b));
            }
        }
    }
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const int64_t group = q_ - 1;
    int64_t r = e % group;
    if (r < 0) r += group;
    uint64_t le = (uint64_t(log_tab_[a]) * uint64_t(r)) % uint64_t(group);
    return exp_tab_[le];
}

uint32_t Field::element_order(uint32_t a) const {
    if (a == 0) throw ZeroElement("order of the zero element is undefined");
    uint64_t group = q_ - 1;
    return uint32_t(group / std::gcd(group, uint64_t(log_tab_[a])));
}

std::vector<Felt> Field::primitive_elements() const {
    std::vector<Felt> out;
    for (uint32_t a = 1; a < q_; ++a)
        if (element_order(a) == q_ - 1) out.push_back(Felt(this, a));
    return out;
}

Felt Field::element(uint32_t rep) const {
    if (rep >= q_) throw BadCoefficient("element representative out of range [0, q)");
    return Felt(this, rep);
}

Felt Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != m_) throw BadCoefficient("coefficient tuple must have m entries");
    uint32_t v = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        if (coeffs[i] >= p_) throw BadCoefficient("tuple entry out of range [0, p)");
        v += coeffs[i] * pow_p_[i];
    }
    return Felt(this, v);
}

Felt Field::zero() const { return Felt(this, 0); }
Felt Field::one() const { return Felt(this, 1); }

std::vector<uint32_t> Field::coeff_tuple(uint32_t rep) const {
    std::vector<uint32_t> out(m_);
    for (uint32_t i = 0; i < m_; ++i) out[i] = (rep / pow_p_[i]) % p_;
    return out;
}

std::string Field::name() const { return "F_" + std::to_string(q_); }

std::string Field::description() const {
    if (m_ == 1) return name();
    std::string mod;
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (modulus_[i] == 0) continue;
        if (!mod.empty()) mod += " + ";
        if (i == 0) {
            mod += std::to_string(modulus_[i]);
        } else {
            if (modulus_[i] != 1) mod += std::to_string(modulus_[i]);
            mod += "x";
            if (i > 1) mod += "^" + std::to_string(i);
        }
    }
    return name() + " = F_" + std::to_string(p_) + "[x]/(" + mod + ")";
}

struct FieldFactory {
    static std::unique_ptr<Field> create(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
        return std::unique_ptr<Field>(new Field(p, m, std::move(modulus)));
    }
};

namespace {

struct FieldKey {
    uint32_t p;
    std::vector<uint32_t> modulus;
    bool operator<(const FieldKey& o) const {
        if (p != o.p) return p < o.p;
        return modulus < o.modulus;
    }
};

std::mutex g_fields_mutex;
std::map<FieldKey, std::unique_ptr<Field>>& field_cache() {
    static std::map<FieldKey, std::unique_ptr<Field>> cache;
    return cache;
}

const Field& intern_field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    std::lock_guard<std::mutex> lock(g_fields_mutex);
    FieldKey key{p, modulus};
    auto& cache = field_cache();
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto f = FieldFactory::create(p, m, std::move(modulus));
        it = cache.emplace(std::move(key), std::move(f)).first;
    }
    return *it->second;
}

}  // namespace

const Field& make_field(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw BadParameters("extension degree must be >= 1");
    if (m == 1) return intern_field(p, 1, {});
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > Field::kMaxQ) throw Overflow("field size p^m exceeds the 2^20 table limit");
    }
    return intern_field(p, m, canonical_modulus(p, m));
}

const Field& make_field(uint32_t p, const std::vector<uint32_t>& modulus) {
    if (modulus.size() < 3) throw BadModulus("explicit modulus requires degree >= 2");
    return intern_field(p, uint32_t(modulus.size() - 1), modulus);
}

uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t d : prime_factors(n)) result -= result / d;
    return result;
}

}  // namespace convmds
