#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic27/gf2k.hpp"

using namespace cubic27;
using namespace cubic27::gf2k;

TEST_CASE("canonical moduli are the smallest irreducibles") {
    // x, x^2+x+1, x^3+x+1, x^4+x+1 as bitmasks
    CHECK(Field::get(1).modulus() == 0b10u);
    CHECK(Field::get(2).modulus() == 0b111u);
    CHECK(Field::get(3).modulus() == 0b1011u);
    CHECK(Field::get(4).modulus() == 0b10011u);
}

TEST_CASE("multiplication in GF(4) and GF(16)") {
    const Field& f4 = Field::get(2);
    const FieldElem u = f4.elem(2);
    CHECK(u * u == f4.elem(3)); // u^2 = u + 1
    CHECK(f4.one() * u == u);

    const Field& f16 = Field::get(4);
    const FieldElem v = f16.elem(2);
    CHECK(pow(v, 3) * pow(v, 12) == f16.one()); // v has order 15
}

TEST_CASE("inverses") {
    const Field& f4 = Field::get(2);
    CHECK(inv(f4.one()) == f4.one());
    CHECK(inv(f4.elem(2)) == f4.elem(3)); // u * (u+1) = 1

    const Field& f16 = Field::get(4);
    const FieldElem v = f16.elem(2);
    CHECK(inv(v) == pow(v, 3) + f16.one()); // v^14 = v^3 + 1
    CHECK_THROWS_AS((void)inv(f4.zero()), ZeroInverse);
}

TEST_CASE("frobenius powers") {
    const Field& f4 = Field::get(2);
    const FieldElem u = f4.elem(2);
    CHECK(frobenius(u, 0) == u);
    CHECK(frobenius(u, 1) == f4.elem(3)); // u^2 = u + 1

    const Field& f16 = Field::get(4);
    const FieldElem v = f16.elem(2);
    CHECK(frobenius(pow(v, 3), 2) == pow(v, 12)); // (v^3)^4
}

TEST_CASE("fifth roots of unity") {
    CHECK(fifth_roots(Field::get(1)).empty());
    CHECK(fifth_roots(Field::get(2)).empty());

    const Field& f16 = Field::get(4);
    const FieldElem v = f16.elem(2);
    auto roots = fifth_roots(f16);
    REQUIRE(roots.size() == 4);
    // {v^3, v^6, v^9, v^12} sorted by bitmask: 8, 10, 12, 15
    CHECK(roots[0] == pow(v, 3));
    CHECK(roots[1] == pow(v, 9));
    CHECK(roots[2] == pow(v, 6));
    CHECK(roots[3] == pow(v, 12));

    // non-empty exactly when 4 | k
    for (int k = 1; k <= 12; ++k)
        CHECK(fifth_roots(Field::get(k)).empty() == (k % 4 != 0));
}

TEST_CASE("subfield embedding") {
    const Field& f2 = Field::get(1);
    const Field& f4 = Field::get(2);
    const Field& f16 = Field::get(4);

    CHECK(embed(f2, f4, f2.one()) == f4.one());
    CHECK(embed(f4, f16, f4.zero()) == f16.zero());
    // Both v^5 and v^10 are roots of x^2+x+1; the rule picks v^5 (bitmask 6).
    const FieldElem u = f4.elem(2);
    const FieldElem v = f16.elem(2);
    CHECK(embed(f4, f16, u) == pow(v, 5));

    CHECK_THROWS_AS((void)embed(f4, Field::get(3), u), NonDividingDegree);

    // Homomorphism on a multiplicative generator.
    const FieldElem g = f4.generator();
    const FieldElem eg = embed(f4, f16, g);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            CHECK(embed(f4, f16, pow(g, i) + pow(g, j)) == pow(eg, i) + pow(eg, j));
    CHECK(embed(f4, f16, g * g) == eg * eg);

    // unembed inverts embed on the image
    for (uint32_t b = 0; b < f4.size(); ++b) {
        const FieldElem a = f4.elem(b);
        CHECK(in_subfield_image(f4, f16, embed(f4, f16, a)));
        CHECK(unembed(f4, f16, embed(f4, f16, a)) == a);
    }
}

TEST_CASE("quadratic pair in GF(16)") {
    const Field& f16 = Field::get(4);
    const FieldElem v = f16.elem(2);
    auto [a, b] = quadratic_pair(f16);
    CHECK(a == pow(v, 10));
    CHECK(b == pow(v, 5));
    CHECK((a + b).is_one());
    CHECK((a * a + a + f16.one()).is_zero());
    CHECK((b * b + b + f16.one()).is_zero());
    // Both lie in the image of the index-2 subfield.
    CHECK(in_subfield_image(Field::get(2), f16, a));
    CHECK(in_subfield_image(Field::get(2), f16, b));

    CHECK_THROWS_AS((void)quadratic_pair(Field::get(2)), NoFifthRoot);
}

TEST_CASE("quadratic pair is swapped by the odd-power frobenius") {
    // The pair lies in the fixed field GF(4); an odd 2-power exponent acts on
    // GF(4) as the squaring map, which exchanges the two roots of x^2+x+1.
    for (int k : {4, 8, 12}) {
        const Field& f = Field::get(k);
        auto [a, b] = quadratic_pair(f);
        CHECK(frobenius(a, 1) == b);
        CHECK(frobenius(a, 3) == b);
        CHECK(frobenius(a, 2) == a);
    }
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937 rng(12345);
    for (int k : {1, 2, 3, 4, 6, 8, 12}) {
        const Field& f = Field::get(k);
        std::uniform_int_distribution<uint32_t> dist(0, f.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElem a = f.elem(dist(rng));
            const FieldElem b = f.elem(dist(rng));
            const FieldElem c = f.elem(dist(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + a).is_zero());
            if (!a.is_zero()) CHECK(a * inv(a) == f.one());
            CHECK(frobenius(a, k) == a);
        }
    }
}

TEST_CASE("spec strings and element literals") {
    const Field& f = Field::parse_spec("GF(2^4)");
    CHECK(f.degree() == 4);
    CHECK(f.spec_string() == "GF(2^4)");
    CHECK_THROWS_AS((void)Field::parse_spec("GF(3^2)"), BadFieldSpec);
    CHECK_THROWS_AS((void)Field::parse_spec("GF(2^13)"), BadFieldSpec);

    CHECK(f.literal(f.zero()) == "0");
    CHECK(f.literal(f.one()) == "1");
    CHECK(f.literal(pow(f.generator(), 7)) == "g^7");
    for (uint32_t b = 0; b < f.size(); ++b)
        CHECK(f.parse_literal(f.literal(f.elem(b))) == f.elem(b));

    // mismatched specs are rejected
    CHECK_THROWS_AS((void)(Field::get(2).one() + Field::get(3).one()), MismatchedSpecs);
}
