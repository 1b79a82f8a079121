#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cubic27/quadric.hpp"

using namespace cubic27;
using namespace cubic27::quadric;
using gf2k::Field;
using gf2k::FieldElem;

namespace {

P1 pt(const Field& f, uint32_t a, uint32_t b) { return P1::of(f.elem(a), f.elem(b)); }

} // namespace

TEST_CASE("rational point counts") {
    CHECK(points(QuadricModel::split(Field::get(2))).size() == 25);
    CHECK(points(QuadricModel::weil(Field::get(1))).size() == 5);
    CHECK(points(QuadricModel::split(Field::get(4))).size() == 289);
    CHECK_THROWS_AS((void)points(QuadricModel::split(Field::get(5))), Capacity);
}

TEST_CASE("action basics") {
    const Field& f4 = Field::get(2);
    auto split = QuadricModel::split(f4);
    const QAut id = aut_identity(split);
    for (const QPoint& p : points(split)) CHECK(act(split, id, p) == p);

    QAut swap = id;
    swap.flip = true;
    const QPoint p{pt(f4, 1, 0), pt(f4, 0, 1)};
    const QPoint q = act(split, swap, p);
    CHECK(q.u == pt(f4, 0, 1));
    CHECK(q.v == pt(f4, 1, 0));

    // the twist of the restriction model fixes exactly the 3 base points
    auto weil = QuadricModel::weil(Field::get(1));
    QAut twist = aut_identity(weil);
    twist.flip = true;
    int fixed = 0;
    for (const QPoint& w : points(weil))
        if (act(weil, twist, w) == w) ++fixed;
    CHECK(fixed == 3);
}

TEST_CASE("action respects composition") {
    for (auto model : {QuadricModel::split(Field::get(2)), QuadricModel::weil(Field::get(1))}) {
        const auto pts = points(model);
        const auto auts = enumerate_aut(model);
        // sample pairs deterministically
        for (size_t i = 0; i < auts.size(); i += 11)
            for (size_t j = 0; j < auts.size(); j += 17) {
                const QAut gh = compose(model, auts[i], auts[j]);
                for (size_t s = 0; s < pts.size(); s += 3)
                    CHECK(act(model, gh, pts[s]) ==
                          act(model, auts[i], act(model, auts[j], pts[s])));
                const QAut inv = aut_inverse(model, auts[i]);
                CHECK(compose(model, auts[i], inv) == aut_identity(model));
            }
    }
}

TEST_CASE("general position predicate") {
    const Field& f16 = Field::get(4);
    auto split16 = QuadricModel::split(f16);
    const FieldElem xi = gf2k::fifth_roots(f16).front();

    auto at = [&](int i, int j) {
        return QPoint{P1::of(f16.one(), gf2k::pow(xi, i)), P1::of(f16.one(), gf2k::pow(xi, j))};
    };
    // the diagonal-action orbit with second exponent doubled
    std::array<QPoint, 5> good = {at(0, 0), at(1, 2), at(2, 4), at(3, 1), at(4, 3)};
    CHECK(is_general_position(split16, good));

    // the diagonal list lies on a (1,1) divisor
    std::array<QPoint, 5> diag = {at(0, 0), at(1, 1), at(2, 2), at(3, 3), at(4, 4)};
    CHECK_FALSE(is_general_position(split16, diag));

    // two points sharing the first ruling
    std::array<QPoint, 5> shared = {QPoint{pt(f16, 1, 0), pt(f16, 1, 0)},
                                    QPoint{pt(f16, 1, 0), pt(f16, 0, 1)}, at(0, 0), at(1, 2),
                                    at(2, 4)};
    CHECK_FALSE(is_general_position(split16, shared));

    std::array<QPoint, 5> dup = {at(0, 0), at(0, 0), at(1, 2), at(2, 4), at(3, 1)};
    CHECK_THROWS_AS((void)is_general_position(split16, dup), DuplicatePoints);

    // invariance under the automorphism group (sampled)
    auto split4 = QuadricModel::split(Field::get(2));
    const auto auts = enumerate_aut(split4);
    const auto pts = points(split4);
    std::array<QPoint, 5> sample = {pts[0], pts[6], pts[12], pts[18], pts[24]};
    const bool base_gp = is_general_position(split4, sample);
    for (size_t i = 0; i < auts.size(); i += 37) {
        std::array<QPoint, 5> image;
        for (int s = 0; s < 5; ++s) image[s] = act(split4, auts[i], sample[s]);
        CHECK(is_general_position(split4, image) == base_gp);
    }
}

TEST_CASE("order-5 representatives") {
    const Field& f16 = Field::get(4);
    auto reps16 = order5_reps(QuadricModel::split(f16));
    REQUIRE(reps16.size() == 3);
    for (const auto& g : reps16) {
        CHECK(aut_order(QuadricModel::split(f16), g) == 5);
        CHECK(g.a == M2::diag(f16.one(), gf2k::fifth_roots(f16).front()));
    }

    const Field& f4 = Field::get(2);
    auto reps4 = order5_reps(QuadricModel::split(f4));
    REQUIRE(reps4.size() == 2);
    for (const auto& g : reps4) CHECK(aut_order(QuadricModel::split(f4), g) == 5);
    // the two companion traces are the two roots of T^2+T+1, swapped between
    // the factors of the second representative
    CHECK(reps4[0].a == M2::companion(f4.elem(3)));
    CHECK(reps4[0].b == M2::companion(f4.elem(2)));
    CHECK(reps4[1].a == reps4[0].b);
    CHECK(reps4[1].b == reps4[0].a);

    auto weil = QuadricModel::weil(Field::get(1));
    auto repsw = order5_reps(weil);
    REQUIRE(repsw.size() == 1);
    CHECK(aut_order(weil, repsw[0]) == 5);
    CHECK(repsw[0].a == M2::companion(f4.elem(3))); // canonical trace u+1
    CHECK_FALSE(repsw[0].flip);

    CHECK_THROWS_AS((void)order5_reps(QuadricModel::split(Field::get(3))), NoOrderFive);
}

TEST_CASE("orbits of order-5 elements") {
    // restriction model: the orbit of [1:1] is all of the 5 rational points
    auto weil = QuadricModel::weil(Field::get(1));
    const Field& l = weil.working_field();
    const QAut g = order5_reps(weil)[0];
    const QPoint start{pt(l, 1, 1), pt(l, 1, 1)};
    auto orbit = orbit_of(weil, g, start);
    std::set<QPoint> oset(orbit.begin(), orbit.end());
    const auto all = points(weil);
    CHECK(oset == std::set<QPoint>(all.begin(), all.end()));
    CHECK(is_general_position(weil, orbit));

    // split model over GF(16): the doubled-exponent orbit list
    const Field& f16 = Field::get(4);
    auto split16 = QuadricModel::split(f16);
    const FieldElem xi = gf2k::fifth_roots(f16).front();
    const QAut eta2 = order5_reps(split16)[0];
    auto orb = orbit_of(split16, eta2, QPoint{pt(f16, 1, 1), pt(f16, 1, 1)});
    std::set<QPoint> expected;
    for (int i = 0; i < 5; ++i)
        expected.insert(
            QPoint{P1::of(f16.one(), gf2k::pow(xi, i)), P1::of(f16.one(), gf2k::pow(xi, 2 * i))});
    CHECK(std::set<QPoint>(orb.begin(), orb.end()) == expected);

    // a fixed point raises an error
    CHECK_THROWS_AS((void)orbit_of(split16, eta2, QPoint{pt(f16, 1, 0), pt(f16, 1, 0)}),
                    ShortOrbit);
}

TEST_CASE("eta4-type orbits fail general position, eta2 and eta3 swap") {
    const Field& f16 = Field::get(4);
    auto split16 = QuadricModel::split(f16);
    const FieldElem xi = gf2k::fifth_roots(f16).front();
    const M2 d1 = M2::diag(f16.one(), xi);
    const QAut eta4{d1, M2::diag(f16.one(), gf2k::pow(xi, 4)), false};

    const auto pts = points(split16);
    for (const QPoint& p : pts) {
        try {
            auto orbit = orbit_of(split16, eta4, p);
            CHECK_FALSE(is_general_position(split16, orbit));
        } catch (const ShortOrbit&) {
        }
    }

    // the factor swap carries eta2 orbits onto eta3 orbits
    const QAut eta2 = order5_reps(split16)[0];
    const QAut eta3 = order5_reps(split16)[1];
    QAut swap = aut_identity(split16);
    swap.flip = true;
    auto orb2 = orbit_of(split16, eta2, QPoint{pt(f16, 1, 1), pt(f16, 1, 1)});
    std::array<QPoint, 5> swapped;
    for (int i = 0; i < 5; ++i) swapped[i] = act(split16, swap, orb2[i]);
    std::sort(swapped.begin(), swapped.end());
    // swapped must be an eta3 orbit: regenerate from one of its points
    auto orb3 = orbit_of(split16, eta3, swapped[0]);
    std::sort(orb3.begin(), orb3.end());
    CHECK(orb3 == swapped);
}

TEST_CASE("orbit uniqueness counts") {
    CHECK(count_orbit_classes(QuadricModel::split(Field::get(2))) == 1);
    CHECK(count_orbit_classes(QuadricModel::weil(Field::get(1))) == 1);
    CHECK(count_orbit_classes(QuadricModel::split(Field::get(4))) == 1);
}

TEST_CASE("transporter equivalence agrees with canonical forms over GF(4)") {
    // cross-check the two equivalence routes on the small split model
    auto split4 = QuadricModel::split(Field::get(2));
    const auto reps = order5_reps(split4);
    const auto pts = points(split4);
    std::vector<std::array<QPoint, 5>> orbits;
    for (const auto& g : reps)
        for (const QPoint& p : pts) {
            try {
                auto o = orbit_of(split4, g, p);
                std::sort(o.begin(), o.end());
                if (is_general_position(split4, o)) orbits.push_back(o);
            } catch (const ShortOrbit&) {
            }
        }
    REQUIRE(orbits.size() >= 2);
    for (size_t i = 1; i < std::min<size_t>(orbits.size(), 8); ++i)
        CHECK(orbits_equivalent(split4, orbits[0], orbits[i]));
}
