#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cubic27/cubic.hpp"

using namespace cubic27;
using namespace cubic27::cubic;
using gf2k::Field;
using gf2k::FieldElem;

namespace {

const char* kFermat = "x^3+y^3+z^3+t^3";
const char* kTwisted = "x^2*t+y^2*z+z^2*y+t^2*x";

Projectivity from_rows(const Field& f, std::array<std::array<uint32_t, 4>, 4> rows) {
    matrix::Mat m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = f.elem(rows[i][j]);
    return Projectivity(std::move(m));
}

} // namespace

TEST_CASE("monomial order is graded-lex") {
    const auto& m = cubic_monomials();
    CHECK(m[0] == std::array<int, 4>{3, 0, 0, 0});
    CHECK(m[1] == std::array<int, 4>{2, 1, 0, 0});
    CHECK(m[19] == std::array<int, 4>{0, 0, 0, 3});
    for (int i = 1; i < 20; ++i) CHECK(m[i - 1] > m[i]); // descending lex
}

TEST_CASE("parsing and printing round trip") {
    const Field& f4 = Field::get(2);
    CubicForm fermat = parse_cubic(kFermat, f4);
    CHECK(fermat.to_string() == "x^3+y^3+z^3+t^3");
    CHECK(parse_cubic(fermat.to_string(), f4) == fermat);

    const Field& f2 = Field::get(1);
    CubicForm tw = parse_cubic(kTwisted, f2);
    CHECK(parse_cubic(tw.to_string(), f2) == tw);

    // coefficients as generator powers, with whitespace
    CubicForm with_coeff = parse_cubic(" g^2 * x^3 + y^2*z ", f4);
    CHECK(parse_cubic(with_coeff.to_string(), f4) == with_coeff);
    // normalization makes the leading coefficient 1
    CHECK(with_coeff.coeffs()[0].is_one());

    CHECK_THROWS_AS((void)parse_cubic("x^2", f4), WrongDegree);
    CHECK_THROWS_AS((void)parse_cubic("x^4", f4), WrongDegree);
    CHECK_THROWS_AS((void)parse_cubic("bogus((", f4), SyntaxError);
    CHECK_THROWS_AS((void)parse_cubic("", f4), SyntaxError);
    CHECK_THROWS_AS((void)parse_cubic("x^3+x^3", f4), ZeroForm);
}

TEST_CASE("transform composes functorially") {
    const Field& f = Field::get(2);
    CubicForm c = parse_cubic(kFermat, f);
    CHECK(transform(c, Projectivity::identity(f, 3)) == c);

    std::mt19937 rng(31);
    std::uniform_int_distribution<uint32_t> dist(0, f.size() - 1);
    auto random_t = [&] {
        while (true) {
            matrix::Mat m(f, 4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(i, j) = f.elem(dist(rng));
            if (!matrix::det(m).is_zero()) return Projectivity(std::move(m));
        }
    };
    for (int trial = 0; trial < 20; ++trial) {
        Projectivity t1 = random_t(), t2 = random_t();
        CHECK(transform(c, t1 * t2) == transform(transform(c, t1), t2));
    }
}

TEST_CASE("smoothness detection") {
    const Field& f2 = Field::get(1);
    CHECK(is_smooth(parse_cubic(kFermat, f2)));
    CHECK(is_smooth(parse_cubic(kTwisted, f2)));
    CHECK_FALSE(is_smooth(parse_cubic("x^2*y", f2)));
    CHECK_FALSE(is_smooth(parse_cubic("x^3", f2)));
    CHECK(is_smooth(parse_cubic(kFermat, Field::get(2))));
    CHECK(is_smooth(parse_cubic("x^3+y^3+z^3+g*t^3", Field::get(2))));
}

TEST_CASE("line configurations") {
    const Field& f4 = Field::get(2);
    SurfaceLines fermat4 = find_lines(parse_cubic(kFermat, f4));
    CHECK(fermat4.split_degree == 1);
    CHECK(fermat4.lines.size() == 27);
    int edges = 0;
    for (int i = 0; i < 27; ++i) edges += __builtin_popcount(fermat4.adj[i]);
    CHECK(edges / 2 == 135);

    // the 9 lines {x = a*y, z = b*t} with a^3 = b^3 = 1
    for (uint32_t ab : {1u, 2u, 3u})
        for (uint32_t bb : {1u, 2u, 3u}) {
            const FieldElem a = f4.elem(ab), b = f4.elem(bb);
            std::array<FieldElem, 6> p = {f4.zero(), a * b, a, b, f4.one(), f4.zero()};
            CHECK(fermat4.index_of(proj::PluckerLine(p)) >= 0);
        }

    const Field& f2 = Field::get(1);
    SurfaceLines fermat2 = find_lines(parse_cubic(kFermat, f2));
    CHECK(fermat2.split_degree == 2);

    SurfaceLines tw = find_lines(parse_cubic(kTwisted, f2));
    CHECK(tw.split_degree == 2);
    // the line {x = 0, z = 0} is among them
    const Field& sf = *tw.split;
    std::array<FieldElem, 6> p = {sf.zero(), sf.zero(), sf.zero(),
                                  sf.zero(), sf.one(),  sf.zero()};
    CHECK(tw.index_of(proj::PluckerLine(p)) >= 0);
}

TEST_CASE("labeling transports adjacency to the lattice pairing") {
    const Field& f4 = Field::get(2);
    SurfaceLines sl = lines_with_labels(parse_cubic(kFermat, f4));
    CHECK(sl.labeled);
    std::set<int> used(sl.label.begin(), sl.label.end());
    CHECK(used.size() == 27);
    const auto& classes = picweyl::standard_classes();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j)
            CHECK((picweyl::pairing(classes[sl.label[i]], classes[sl.label[j]]) == 1) ==
                  sl.adjacent(i, j));
}

TEST_CASE("Galois images") {
    const Field& f4 = Field::get(2);
    const Field& f2 = Field::get(1);

    CubicForm fermat4 = parse_cubic(kFermat, f4);
    auto gal4 = galois_image(fermat4, lines_with_labels(fermat4));
    CHECK(gal4.order == 1);
    CHECK(gal4.line_perm.is_identity());

    CubicForm tw = parse_cubic(kTwisted, f2);
    auto galtw = galois_image(tw, lines_with_labels(tw));
    CHECK(galtw.order == 2);
    CHECK(galtw.cls.name() == "A1");
    CHECK(galtw.fixed_lines == 15);

    CubicForm fermat2 = parse_cubic(kFermat, f2);
    auto gal2 = galois_image(fermat2, lines_with_labels(fermat2));
    CHECK(gal2.order == 2);
}

TEST_CASE("automorphism groups over GF(2)") {
    const Field& f2 = Field::get(1);

    CubicForm tw = parse_cubic(kTwisted, f2);
    AutGroup aut_tw = automorphisms(tw);
    CHECK(aut_tw.elements.size() == 720);
    CHECK(aut_tw.label == "S6");
    for (size_t i = 0; i < std::min<size_t>(aut_tw.elements.size(), 25); ++i)
        CHECK(maps_onto(tw, tw, aut_tw.elements[i]));

    CubicForm fermat2 = parse_cubic(kFermat, f2);
    AutGroup aut_f2 = automorphisms(fermat2);
    CHECK(aut_f2.elements.size() == 48);
    CHECK(aut_f2.label == "Z/2xS4");

    // the exhaustive GL4(GF(2)) oracle must agree element by element
    auto oracle = gl4_f2_automorphism_scan(fermat2);
    std::vector<Projectivity> found = aut_f2.elements;
    std::sort(found.begin(), found.end());
    CHECK(found == oracle);

    auto oracle_tw = gl4_f2_automorphism_scan(tw);
    std::vector<Projectivity> found_tw = aut_tw.elements;
    std::sort(found_tw.begin(), found_tw.end());
    CHECK(found_tw == oracle_tw);
}

TEST_CASE("automorphism group of the diagonal cubic over GF(4)") {
    const Field& f4 = Field::get(2);
    AutGroup aut = automorphisms(parse_cubic(kFermat, f4));
    CHECK(aut.elements.size() == 25920);
    CHECK(aut.label == "PSU4(F2)");
}

TEST_CASE("isomorphism testing") {
    const Field& f4 = Field::get(2);
    const Field& f2 = Field::get(1);

    CubicForm fermat4 = parse_cubic(kFermat, f4);
    auto self_witness = is_isomorphic(fermat4, fermat4);
    REQUIRE(self_witness.has_value());
    CHECK(maps_onto(fermat4, fermat4, *self_witness));

    // over GF(4) the twisted surface becomes the diagonal one
    CubicForm tw4 = parse_cubic(kTwisted, f4);
    auto witness = is_isomorphic(tw4, fermat4);
    REQUIRE(witness.has_value());
    CHECK(maps_onto(tw4, fermat4, *witness));

    // over GF(2) they are not isomorphic
    CubicForm tw2 = parse_cubic(kTwisted, f2);
    CubicForm fermat2 = parse_cubic(kFermat, f2);
    CHECK_FALSE(is_isomorphic(tw2, fermat2).has_value());
}

TEST_CASE("explicit change of coordinates between the two surfaces over GF(4)") {
    const Field& f4 = Field::get(2);
    const uint32_t w = f4.generator().bits; // a primitive cube root
    const uint32_t w2 = (f4.generator() * f4.generator()).bits;
    CubicForm tw = parse_cubic(kTwisted, f4);
    CubicForm fermat = parse_cubic(kFermat, f4);

    // block map pairing x with t and y with z: passes exactly
    Projectivity good =
        from_rows(f4, {{{w2, 0, 0, 1}, {w, 0, 0, 1}, {0, 1, w2, 0}, {0, 1, w, 0}}});
    CHECK(maps_onto(tw, fermat, good));

    // the same Vandermonde blocks paired (x,y),(z,t) fail the coefficient
    // identity in every orientation
    Projectivity vander =
        from_rows(f4, {{{1, 1, 0, 0}, {w, w2, 0, 0}, {0, 0, 1, 1}, {0, 0, w, w2}}});
    CHECK_FALSE(maps_onto(tw, fermat, vander));
    CHECK_FALSE(maps_onto(fermat, tw, vander));
    CHECK_FALSE(maps_onto(tw, fermat, vander.inverse()));
    CHECK_FALSE(maps_onto(fermat, tw, vander.inverse()));
}

TEST_CASE("surface point samples lie on the surface") {
    const Field& f2 = Field::get(1);
    CubicForm tw = parse_cubic(kTwisted, f2);
    SurfaceLines sl = find_lines(tw);
    CubicForm ce = embed_form(tw, *sl.split);
    for (const auto& p : surface_points(sl, 10))
        CHECK(evaluate(ce, {p.coords()[0], p.coords()[1], p.coords()[2], p.coords()[3]})
                  .is_zero());
}
