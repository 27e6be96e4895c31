#include "convmds/convcode.hpp"

#include <algorithm>
#include <functional>

namespace convmds {

namespace {

// Determinant of a k x k polynomial matrix by Laplace expansion along the
// first row. k <= 4, so the factorial blowup is irrelevant.
Poly poly_det(const std::vector<const Poly*>& m, int k, const Field& f) {
    if (k == 1) return *m[0];
    Poly acc = Poly::zero(f);
    for (int col = 0; col < k; ++col) {
        if (m[col]->is_zero()) continue;
        std::vector<const Poly*> sub;
        sub.reserve(size_t(k - 1) * (k - 1));
        for (int r = 1; r < k; ++r)
            for (int c = 0; c < k; ++c)
                if (c != col) sub.push_back(m[size_t(r) * k + c]);
        Poly term = *m[col] * poly_det(sub, k - 1, f);
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void enumerate_column_subsets(int n, int k, std::vector<int>& pick, int start,
                              const std::function<void(const std::vector<int>&)>& fn) {
    if (int(pick.size()) == k) {
        fn(pick);
        return;
    }
    for (int c = start; c <= n - (k - int(pick.size())); ++c) {
        pick.push_back(c);
        enumerate_column_subsets(n, k, pick, c + 1, fn);
        pick.pop_back();
    }
}

}  // namespace

std::vector<Poly> full_size_minors(const GeneratorMatrix& g) {
    if (g.k > 4) throw UnsupportedK("minor computation supports k <= 4");
    std::vector<Poly> minors;
    std::vector<int> pick;
    enumerate_column_subsets(g.n, g.k, pick, 0, [&](const std::vector<int>& cols) {
        std::vector<const Poly*> m;
        m.reserve(size_t(g.k) * g.k);
        for (int r = 0; r < g.k; ++r)
            for (int c : cols) m.push_back(&g.at(r, c));
        minors.push_back(poly_det(m, g.k, *g.field));
    });
    return minors;
}

ConvCode ConvCode::from_entries(const Field& f, int k, int n, std::vector<Poly> entries) {
    if (k < 1 || n < 1 || k > n) throw BadDimensions("need 1 <= k <= n");
    if (entries.size() != size_t(k) * n) throw BadDimensions("entry grid does not match k x n");
    for (const Poly& e : entries)
        if (&e.field() != &f) throw FieldMismatch("generator entry over a different field");

    GeneratorMatrix gen{&f, k, n, std::move(entries)};
    int delta = -1;
    for (const Poly& m : full_size_minors(gen)) {
        if (auto d = m.degree()) delta = std::max(delta, *d);
    }
    if (delta < 0) throw RankDeficient("all full-size minors vanish; generator is not full row rank");
    return ConvCode(std::move(gen), delta);
}

ConvCode ConvCode::make(const Field& f, int k, int n,
                        const std::vector<std::vector<std::vector<int64_t>>>& grid) {
    if (int(grid.size()) != k) throw BadDimensions("generator grid must have k rows");
    std::vector<Poly> entries;
    entries.reserve(size_t(k) * n);
    for (const auto& row : grid) {
        if (int(row.size()) != n) throw BadDimensions("generator row must have n entries");
        for (const auto& coeffs : row) entries.push_back(Poly::from_ints(f, coeffs));
    }
    return from_entries(f, k, n, std::move(entries));
}

int code_degree(const ConvCode& code) { return code.degree(); }

int singleton_bound(int n, int k, int delta) {
    if (k < 1 || k > n || delta < 0) throw BadParameters("need 1 <= k <= n and delta >= 0");
    return (n - k) * (delta / k + 1) + delta + 1;
}

std::vector<Poly> encode(const ConvCode& code, const std::vector<Poly>& u) {
    if (int(u.size()) != code.k()) throw BadDimensions("input vector must have k entries");
    for (const Poly& p : u)
        if (&p.field() != &code.field()) throw FieldMismatch("input over a different field");
    std::vector<Poly> v;
    v.reserve(code.n());
    for (int j = 0; j < code.n(); ++j) {
        Poly acc = Poly::zero(code.field());
        for (int r = 0; r < code.k(); ++r) acc = acc + u[r] * code.entry(r, j);
        v.push_back(std::move(acc));
    }
    return v;
}

std::vector<Poly> encode(const ConvCode& code, const Poly& u) {
    return encode(code, std::vector<Poly>{u});
}

int codeword_weight(const std::vector<Poly>& v) {
    int w = 0;
    for (const Poly& p : v) w += p.weight();
    return w;
}

CapabilityReport error_capabilities(int d_free) {
    if (d_free < 1) throw BadParameters("free distance must be >= 1");
    return CapabilityReport{d_free, d_free - 1, (d_free - 1) / 2};
}

CatastrophicityReport is_catastrophic(const ConvCode& code) {
    const Field& f = code.field();
    Poly g = Poly::zero(f);
    bool have = false;
    for (const Poly& m : full_size_minors(code.generator())) {
        if (m.is_zero()) continue;
        g = have ? poly_gcd(g, m) : m.monic();
        have = true;
    }
    if (!have) throw RankDeficient("all minors vanish");  // excluded by construction

    CatastrophicityReport rep{g, g.degree() > 0, std::nullopt};
    if (!rep.is_catastrophic) return rep;

    // Smallest monic irreducible divisor: roots first, then trial division by
    // ascending degree. The first divisor found at the smallest degree is
    // necessarily irreducible.
    for (uint32_t r = 0; r < f.q(); ++r) {
        if (g.eval(f.element(r)).is_zero()) {
            rep.witness_factor = poly_from_roots(f, {f.element(r)});
            return rep;
        }
    }
    const int dg = *g.degree();
    for (int d = 2; 2 * d <= dg; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= f.q();
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> reps(size_t(d) + 1);
            uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                reps[i] = uint32_t(rest % f.q());
                rest /= f.q();
            }
            reps[d] = 1;
            Poly cand = Poly::from_reps(f, std::move(reps));
            if (poly_divmod(g, cand).second.is_zero()) {
                rep.witness_factor = cand;
                return rep;
            }
        }
    }
    rep.witness_factor = g;  // gcd itself is irreducible
    return rep;
}

}  // namespace convmds
