#pragma once

#include <array>
#include <vector>

#include "cubic27/gf2k.hpp"

namespace cubic27::quadric {

using gf2k::Field;
using gf2k::FieldElem;

struct NoOrderFive : Error {
    NoOrderFive() : Error("automorphism group has no element of order 5") {}
};
struct ShortOrbit : Error {
    ShortOrbit() : Error("point is fixed by the order-5 element") {}
};
struct DuplicatePoints : Error {
    DuplicatePoints() : Error("the five points are not distinct") {}
};
struct Capacity : Error {
    Capacity() : Error("model exceeds the enumeration caps") {}
};
struct ModelMismatch : Error {
    ModelMismatch() : Error("value does not belong to this quadric model") {}
};

// Point of P^1, normalized so the first nonzero coordinate is 1.
struct P1 {
    FieldElem a, b;
    static P1 of(const FieldElem& x, const FieldElem& y);
    friend bool operator==(const P1& p, const P1& q) { return p.a == q.a && p.b == q.b; }
    friend bool operator!=(const P1& p, const P1& q) { return !(p == q); }
    friend bool operator<(const P1& p, const P1& q) {
        if (p.a.bits != q.a.bits) return p.a.bits < q.a.bits;
        return p.b.bits < q.b.bits;
    }
};

// 2x2 invertible matrix modulo scalars.
struct M2 {
    FieldElem e00, e01, e10, e11;
    static M2 of(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d);
    static M2 identity(const Field& f);
    static M2 diag(const FieldElem& a, const FieldElem& b);
    static M2 companion(const FieldElem& trace); // [[trace,1],[1,0]]
    P1 apply(const P1& p) const;
    M2 times(const M2& o) const;
    M2 inverse() const;
    M2 frobenius(int j) const;
    bool is_identity() const;
    friend bool operator==(const M2& x, const M2& y) {
        return x.e00 == y.e00 && x.e01 == y.e01 && x.e10 == y.e10 && x.e11 == y.e11;
    }
    friend bool operator<(const M2& x, const M2& y);
};

// Degree-8 quadric models: the split product of two projective lines over the
// base, or the quadratic-restriction model whose rational points are the
// P^1 points of the degree-2 extension.
struct QuadricModel {
    enum class Kind { Split, WeilRestriction };
    Kind kind;
    const Field* base;
    const Field* ext; // equals base for Split, the degree-2 extension otherwise

    static QuadricModel split(const Field& f);
    static QuadricModel weil(const Field& base_field);
    const Field& working_field() const { return *ext; }
};

// Split: the pair (u,v); WeilRestriction: the single extension point u
// (v mirrors u and is ignored).
struct QPoint {
    P1 u, v;
    friend bool operator==(const QPoint& p, const QPoint& q) { return p.u == q.u && p.v == q.v; }
    friend bool operator!=(const QPoint& p, const QPoint& q) { return !(p == q); }
    friend bool operator<(const QPoint& p, const QPoint& q) {
        if (!(p.u == q.u)) return p.u < q.u;
        return p.v < q.v;
    }
};

// Split: (a,b;flip) acting by the two matrices followed by the optional
// factor swap.  WeilRestriction: (a;flip) acting by the matrix followed by
// the optional Galois twist; b is pinned to the identity.
struct QAut {
    M2 a, b;
    bool flip = false;
    friend bool operator==(const QAut& x, const QAut& y) {
        return x.a == y.a && x.b == y.b && x.flip == y.flip;
    }
};

std::vector<QPoint> points(const QuadricModel& m);
QPoint act(const QuadricModel& m, const QAut& g, const QPoint& p);
QAut compose(const QuadricModel& m, const QAut& g1, const QAut& g2);
QAut aut_inverse(const QuadricModel& m, const QAut& g);
int aut_order(const QuadricModel& m, const QAut& g);
QAut aut_identity(const QuadricModel& m);

// Base change of a rational point to the split form over the working field:
// Split points map to themselves, restriction points to (u, conj(u)).
std::pair<P1, P1> base_change(const QuadricModel& m, const QPoint& p);

// No 2 of the 5 points on a common ruling and no 4 on a (1,1) divisor,
// evaluated after base change.
bool is_general_position(const QuadricModel& m, const std::array<QPoint, 5>& pts);

// Canonical generators of order-5 subgroups up to the conjugacy reductions:
// diagonal pairs (1,x),(1,x^j) for j=2,3,4 when a fifth root x exists; the
// two companion pairs otherwise; the single companion for the restriction.
std::vector<QAut> order5_reps(const QuadricModel& m);

std::array<QPoint, 5> orbit_of(const QuadricModel& m, const QAut& g, const QPoint& p);

// Number of general-position 5-point orbits of order-5 subgroups up to the
// full automorphism group.
int count_orbit_classes(const QuadricModel& m);

// Explicit search for an automorphism carrying one 5-point set to another.
bool orbits_equivalent(const QuadricModel& m, const std::array<QPoint, 5>& o1,
                       const std::array<QPoint, 5>& o2);

// All automorphisms, when 2*|PGL2|^2 (split) resp. 2*|PGL2| (restriction)
// fits the cap.
std::vector<QAut> enumerate_aut(const QuadricModel& m, uint64_t cap = 10'000'000);

} // namespace cubic27::quadric
