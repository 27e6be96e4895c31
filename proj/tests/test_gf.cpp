#include <doctest.h>

#include <random>

#include "convmds/gf.hpp"

using namespace convmds;

TEST_CASE("make_field constructs prime fields") {
    const Field& f11 = make_field(11);
    CHECK(f11.p() == 11);
    CHECK(f11.m() == 1);
    CHECK(f11.q() == 11);
    CHECK(f11.modulus().empty());
    CHECK(&make_field(11) == &f11);  // interned
}

TEST_CASE("make_field picks the first irreducible modulus for F_9") {
    const Field& f9 = make_field(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<uint32_t>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4), NotPrime);
    CHECK_THROWS_AS(make_field(1), NotPrime);
    CHECK_THROWS_AS(make_field(2, 0), BadParameters);
    CHECK_THROWS_AS(make_field(2, 21), Overflow);  // 2^21 > 2^20
    CHECK_THROWS_AS(make_field(3, std::vector<uint32_t>{0, 0, 1}), BadModulus);  // x^2 reducible
    CHECK_THROWS_AS(make_field(3, std::vector<uint32_t>{1, 0, 2}), BadModulus);  // not monic
}

TEST_CASE("arithmetic examples over F_11") {
    const Field& f = make_field(11);
    CHECK((f.element(8) * f.element(10)).rep() == 3);
    CHECK(f.element(1).inv() == f.one());
    CHECK(f.element(2).pow(-5).rep() == 10);
    CHECK((f.element(3) + f.element(9)).rep() == 1);
    CHECK((f.element(3) - f.element(9)).rep() == 5);
    CHECK((-f.element(4)).rep() == 7);
    CHECK(f.element(0).pow(0).rep() == 1);
    CHECK(f.element(0).pow(3).rep() == 0);
    CHECK_THROWS_AS(f.element(5) / f.element(0), DivisionByZero);
    CHECK_THROWS_AS(f.element(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(f.element(0).pow(-1), DivisionByZero);
    CHECK_THROWS_AS(f.element(11), BadCoefficient);
}

TEST_CASE("cross-field operations are a hard error") {
    const Field& f11 = make_field(11);
    const Field& f9 = make_field(3, 2);
    CHECK_THROWS_AS(f11.element(1) + f9.element(1), FieldMismatch);
    CHECK(f11.element(1) != f9.element(1));
}

TEST_CASE("element orders in F_11") {
    const Field& f = make_field(11);
    CHECK(element_order(f.element(2)) == 10);
    CHECK(element_order(f.element(1)) == 1);
    CHECK(element_order(f.element(10)) == 2);
    CHECK_THROWS_AS(element_order(f.zero()), ZeroElement);
}

TEST_CASE("primitive elements") {
    const Field& f11 = make_field(11);
    std::vector<uint32_t> reps;
    for (Felt a : f11.primitive_elements()) reps.push_back(a.rep());
    CHECK(reps == std::vector<uint32_t>{2, 6, 7, 8});

    const Field& f2 = make_field(2);
    CHECK(f2.primitive_elements().size() == 1);
    CHECK(f2.primitive_elements()[0].rep() == 1);

    const Field& f9 = make_field(3, 2);
    auto prim9 = f9.primitive_elements();
    CHECK(prim9.size() == euler_phi(8));
    for (Felt a : prim9) CHECK(element_order(a) == 8);
}

TEST_CASE("primitive element count equals phi(q - 1)") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {11, 1}, {13, 1},
                        {2, 3}, {3, 2}, {5, 2}}) {
        const Field& f = make_field(p, m);
        CHECK(f.primitive_elements().size() == euler_phi(f.q() - 1));
    }
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(12345);
    for (const Field* fp : {&make_field(11), &make_field(3, 2), &make_field(2, 3)}) {
        const Field& f = *fp;
        std::uniform_int_distribution<uint32_t> dist(0, f.q() - 1);
        for (int i = 0; i < 1000; ++i) {
            Felt a = f.element(dist(rng)), b = f.element(dist(rng)), c = f.element(dist(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK(a * a.inv() == f.one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("Frobenius: (a + b)^p = a^p + b^p") {
    std::mt19937 rng(777);
    for (const Field* fp : {&make_field(3, 2), &make_field(2, 3), &make_field(5, 2)}) {
        const Field& f = *fp;
        std::uniform_int_distribution<uint32_t> dist(0, f.q() - 1);
        for (int i = 0; i < 1000; ++i) {
            Felt a = f.element(dist(rng)), b = f.element(dist(rng));
            CHECK((a + b).pow(f.p()) == a.pow(f.p()) + b.pow(f.p()));
        }
    }
}

TEST_CASE("a^(q-1) = 1 and order divides q - 1") {
    for (const Field* fp : {&make_field(11), &make_field(3, 2), &make_field(13)}) {
        const Field& f = *fp;
        for (uint32_t v = 1; v < f.q(); ++v) {
            Felt a = f.element(v);
            CHECK(a.pow(f.q() - 1) == f.one());
            CHECK((f.q() - 1) % element_order(a) == 0);
        }
    }
}

TEST_CASE("generic large-field path (no dense tables)") {
    const Field& f = make_field(2, 10);  // q = 1024, beyond the 2D table threshold
    CHECK(f.q() == 1024);
    std::mt19937 rng(99);
    std::uniform_int_distribution<uint32_t> dist(0, f.q() - 1);
    for (int i = 0; i < 200; ++i) {
        Felt a = f.element(dist(rng)), b = f.element(dist(rng));
        CHECK(a * (b + b) == a * b + a * b);
        CHECK((a + b).pow(2) == a.pow(2) + b.pow(2));  // char 2
        if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
}

TEST_CASE("coefficient tuples round-trip") {
    const Field& f9 = make_field(3, 2);
    for (uint32_t v = 0; v < 9; ++v) {
        auto tuple = f9.coeff_tuple(v);
        REQUIRE(tuple.size() == 2);
        CHECK(f9.from_coeffs(tuple).rep() == v);
    }
    CHECK_THROWS_AS(f9.from_coeffs({1, 2, 0}), BadCoefficient);
    CHECK_THROWS_AS(f9.from_coeffs({3, 0}), BadCoefficient);
}
