#include <doctest.h>

#include <random>

#include "convmds/codefile.hpp"
#include "convmds/constructions.hpp"

using namespace convmds;

TEST_CASE("code files round-trip") {
    ConvCode t3 = theorem3_code();
    CodeFile cf = CodeFile::from_code(t3);
    CHECK(cf.p == 11);
    CHECK(cf.m == 1);
    CHECK(cf.k == 1);
    CHECK(cf.n == 2);

    CodeFile again = CodeFile::parse(cf.serialize());
    CHECK(again.serialize() == cf.serialize());
    ConvCode rebuilt = again.to_code();
    for (int j = 0; j < 2; ++j) CHECK(rebuilt.entry(0, j) == t3.entry(0, j));
}

TEST_CASE("extension-field code files carry the modulus") {
    const Field& f9 = make_field(3, 2);
    ConvCode c = justesen_rate_half(f9, f9.primitive_elements().front());
    CodeFile cf = CodeFile::from_code(c);
    CHECK(cf.m == 2);
    CHECK(cf.modulus == std::vector<uint32_t>{1, 0, 1});

    CodeFile again = CodeFile::parse(cf.serialize());
    ConvCode rebuilt = again.to_code();
    CHECK(&rebuilt.field() == &f9);
    for (int j = 0; j < 2; ++j) CHECK(rebuilt.entry(0, j) == c.entry(0, j));
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_AS(CodeFile::parse("not json at all"), CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse("[]"), CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse(R"({"k":1,"n":2,"generator":[]})"), CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse(R"({"field":{"p":11},"k":1,"n":2,"generator":[]})"),
                    CodeFileError);
    CHECK_THROWS_AS(
        CodeFile::parse(R"({"field":{"p":11,"m":1,"modulus":[1,1]},"k":1,"n":2,"generator":[[[1],[1]]]})"),
        CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse(R"({"field":{"p":3,"m":2},"k":1,"n":2,"generator":[[[1],[1]]]})"),
                    CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse(R"({"field":{"p":11,"m":1},"k":1,"n":2,"generator":"x"})"),
                    CodeFileError);
    // out-of-range scalars
    CHECK_THROWS_AS(CodeFile::parse(R"({"field":{"p":2097152,"m":1},"k":1,"n":2,"generator":[[[1],[1]]]})"),
                    CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse(R"({"field":{"p":11,"m":25},"k":1,"n":2,"generator":[[[1],[1]]]})"),
                    CodeFileError);
    CHECK_THROWS_AS(CodeFile::parse(R"({"field":{"p":11,"m":1},"k":0,"n":2,"generator":[[[1],[1]]]})"),
                    CodeFileError);
}

TEST_CASE("to_code surfaces validation failures as CodeFileError") {
    auto make = [](const std::string& body) { return CodeFile::parse(body).to_code(); };
    // composite characteristic
    CHECK_THROWS_AS(make(R"({"field":{"p":4,"m":1},"k":1,"n":2,"generator":[[[1],[1]]]})"),
                    CodeFileError);
    // coefficient out of range
    CHECK_THROWS_AS(make(R"({"field":{"p":11,"m":1},"k":1,"n":2,"generator":[[[11],[1]]]})"),
                    CodeFileError);
    // grid does not match k x n
    CHECK_THROWS_AS(make(R"({"field":{"p":11,"m":1},"k":1,"n":2,"generator":[[[1]]]})"),
                    CodeFileError);
    // rank-deficient generator
    CHECK_THROWS_AS(make(R"({"field":{"p":11,"m":1},"k":1,"n":2,"generator":[[[0],[0]]]})"),
                    CodeFileError);
    // reducible modulus
    CHECK_THROWS_AS(
        make(R"({"field":{"p":3,"m":2,"modulus":[0,0,1]},"k":1,"n":2,"generator":[[[1],[1]]]})"),
        CodeFileError);
}

TEST_CASE("random code files round-trip") {
    std::mt19937 rng(7);
    const Field& f = make_field(13);
    std::uniform_int_distribution<uint32_t> coeff(0, 12);
    for (int i = 0; i < 200; ++i) {
        std::vector<Poly> entries;
        bool nonzero = false;
        for (int j = 0; j < 2; ++j) {
            std::vector<uint32_t> c(1 + rng() % 5);
            for (auto& x : c) x = coeff(rng);
            Poly p = Poly::from_reps(f, c);
            nonzero |= !p.is_zero();
            entries.push_back(std::move(p));
        }
        if (!nonzero) continue;
        ConvCode c = ConvCode::from_entries(f, 1, 2, entries);
        CodeFile cf = CodeFile::from_code(c);
        CodeFile back = CodeFile::parse(cf.serialize());
        CHECK(back.serialize() == cf.serialize());
        ConvCode rebuilt = back.to_code();
        for (int j = 0; j < 2; ++j) CHECK(rebuilt.entry(0, j) == c.entry(0, j));
    }
}
