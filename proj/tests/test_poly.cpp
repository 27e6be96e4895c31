#include <doctest.h>

#include <random>

#include "convmds/poly.hpp"

using namespace convmds;

namespace {

Poly random_poly(const Field& f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg_dist(-1, max_deg);  // -1 = zero polynomial
    const int d = deg_dist(rng);
    if (d < 0) return Poly::zero(f);
    std::uniform_int_distribution<uint32_t> coeff(0, f.q() - 1);
    std::vector<uint32_t> c(size_t(d) + 1);
    for (auto& x : c) x = coeff(rng);
    c[d] = 1 + coeff(rng) % (f.q() - 1);  // exact degree d
    return Poly::from_reps(f, c);
}

}  // namespace

TEST_CASE("normalization and the degree sentinel") {
    const Field& f = make_field(11);
    Poly z = Poly::from_ints(f, {0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == std::nullopt);
    CHECK(z.degree() < Poly::one(f).degree());  // nullopt < 0
    CHECK(Poly::from_ints(f, {3, 0, 0}).degree() == 0);
    CHECK(Poly::from_ints(f, {0, 0, 1}).degree() == 2);
}

TEST_CASE("product examples over F_11") {
    const Field& f = make_field(11);
    Poly a = Poly::from_ints(f, {1, 1});
    Poly b = Poly::from_ints(f, {1, 10, 1, 10, 1});
    CHECK(a * b == Poly::from_ints(f, {1, 0, 0, 0, 0, 1}));  // 1 + D^5

    Poly fp = Poly::from_ints(f, {8, 5, 1});
    CHECK(fp + Poly::zero(f) == fp);
    CHECK(poly_from_roots(f, {f.element(2), f.element(4)}) == fp);  // (x-2)(x-4)
}

TEST_CASE("evaluation") {
    const Field& f = make_field(11);
    Poly g1 = Poly::from_ints(f, {8, 5, 1, 1, 5, 8});
    CHECK(g1.eval(f.element(10)).is_zero());
    CHECK(Poly::zero(f).eval(f.element(7)).is_zero());
    CHECK(Poly::from_ints(f, {8, 5, 1}).eval(f.element(2)).is_zero());
    CHECK(Poly::from_ints(f, {8, 5, 1}).eval(f.element(0)).rep() == 8);
}

TEST_CASE("gcd examples") {
    const Field& f = make_field(11);
    Poly x2m1 = Poly::from_ints(f, {10, 0, 1});  // x^2 - 1
    Poly xm1 = Poly::from_ints(f, {10, 1});      // x - 1
    CHECK(poly_gcd(x2m1, xm1) == xm1);           // monic form of x - 1 is x + 10

    CHECK(poly_gcd(Poly::from_ints(f, {0, 1}), Poly::from_ints(f, {1, 1})) == Poly::one(f));

    Poly g1 = Poly::from_ints(f, {8, 5, 1, 1, 5, 8});
    Poly g2 = Poly::from_ints(f, {8, 6, 1, 1, 6, 8});
    Poly g = poly_gcd(g1, g2);
    CHECK(g.degree() >= 1);
    CHECK(poly_divmod(g, Poly::from_ints(f, {1, 1})).second.is_zero());  // (D + 1) | gcd

    CHECK_THROWS_AS(poly_gcd(Poly::zero(f), Poly::zero(f)), BothZero);
    CHECK(poly_gcd(g1 * f.element(7), Poly::zero(f)) == g1.monic());
}

TEST_CASE("argument scaling") {
    const Field& f = make_field(11);
    Poly g1 = Poly::from_ints(f, {8, 5, 1});
    CHECK(g1.scale_arg(f.element(10)) == Poly::from_ints(f, {8, 6, 1}));
    CHECK(g1.scale_arg(f.one()) == g1);
    Poly x2 = Poly::from_ints(f, {0, 0, 1});
    CHECK(x2.scale_arg(f.element(10)) == x2);  // 10^2 = 1
    CHECK_THROWS_AS(g1.scale_arg(f.zero()), ZeroScale);
}

TEST_CASE("from_roots") {
    const Field& f = make_field(11);
    CHECK(poly_from_roots(f, {}) == Poly::one(f));
    CHECK(poly_from_roots(f, {f.zero(), f.zero()}) == Poly::from_ints(f, {0, 0, 1}));
    std::mt19937 rng(5);
    std::uniform_int_distribution<uint32_t> dist(0, 10);
    for (int i = 0; i < 100; ++i) {
        std::vector<Felt> roots;
        for (int j = 0; j < 3; ++j) roots.push_back(f.element(dist(rng)));
        Poly prod = poly_from_roots(f, roots);
        CHECK(prod.leading() == f.one());
        for (Felt r : roots) CHECK(prod.eval(r).is_zero());
    }
}

TEST_CASE("ring axioms and degree additivity on random polynomials") {
    std::mt19937 rng(4242);
    for (const Field* fp : {&make_field(11), &make_field(3, 2)}) {
        const Field& f = *fp;
        for (int i = 0; i < 1000; ++i) {
            Poly a = random_poly(f, 5, rng), b = random_poly(f, 5, rng),
                 c = random_poly(f, 4, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Poly::zero(f));
            if (!a.is_zero() && !b.is_zero())
                CHECK(*(a * b).degree() == *a.degree() + *b.degree());
        }
    }
}

TEST_CASE("divmod invariant: f = q*g + r with deg r < deg g") {
    std::mt19937 rng(31337);
    const Field& f = make_field(11);
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(f, 7, rng), b = random_poly(f, 4, rng);
        if (b.is_zero()) {
            CHECK_THROWS_AS(poly_divmod(a, b), DivisionByZero);
            continue;
        }
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd divides both inputs and is monic") {
    std::mt19937 rng(2024);
    const Field& f = make_field(11);
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(f, 6, rng), b = random_poly(f, 6, rng);
        if (a.is_zero() && b.is_zero()) continue;
        Poly g = poly_gcd(a, b);
        CHECK(g.leading() == f.one());
        if (!a.is_zero()) CHECK(poly_divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(poly_divmod(b, g).second.is_zero());
    }
}

TEST_CASE("scale_arg round-trips through the inverse scale") {
    std::mt19937 rng(808);
    const Field& f = make_field(11);
    std::uniform_int_distribution<uint32_t> dist(1, 10);
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(f, 6, rng);
        Felt beta = f.element(dist(rng));
        CHECK(a.scale_arg(beta).scale_arg(beta.inv()) == a);
    }
}

TEST_CASE("reversal") {
    const Field& f = make_field(11);
    Poly g1 = Poly::from_ints(f, {8, 5, 1, 1, 5, 8});
    CHECK(g1.reversed(5) == g1);  // palindrome
    Poly a = Poly::from_ints(f, {1, 2});
    CHECK(a.reversed(3) == Poly::from_ints(f, {0, 0, 2, 1}));
    CHECK_THROWS_AS(a.reversed(0), BadParameters);
}

TEST_CASE("to_string") {
    const Field& f = make_field(11);
    CHECK(Poly::zero(f).to_string() == "0");
    CHECK(Poly::from_ints(f, {8, 5, 1, 1, 5, 8}).to_string() ==
          "8 + 5D + D^2 + D^3 + 5D^4 + 8D^5");
    CHECK(Poly::from_ints(f, {1, 0, 0, 0, 0, 1}).to_string() == "1 + D^5");
}
