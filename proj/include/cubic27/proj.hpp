#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubic27/matrix.hpp"

namespace cubic27::proj {

using gf2k::Field;
using gf2k::FieldElem;
using matrix::Mat;
using matrix::Vec;

struct ZeroVector : Error {
    ZeroVector() : Error("projective coordinates are all zero") {}
};
struct EqualPoints : Error {
    EqualPoints() : Error("the two points coincide") {}
};
struct DegenerateFrame : Error {
    DegenerateFrame() : Error("points do not form a projective frame") {}
};
struct NoOrderFive : Error {
    NoOrderFive() : Error("group order is not divisible by 5") {}
};
struct NotOrderFive : Error {
    NotOrderFive() : Error("element does not have order 5 in PGL2") {}
};
struct CapacityExceeded : Error {
    CapacityExceeded() : Error("enumeration exceeds the configured cap") {}
};
struct BadPlucker : Error {
    BadPlucker() : Error("coordinates violate the quadric relation p01*p23 + p02*p13 + p03*p12 = 0") {}
};

// Point of P^n, normalized so the first nonzero coordinate is 1.
class ProjPoint {
public:
    explicit ProjPoint(Vec coords);
    int dim() const { return static_cast<int>(c_.size()) - 1; }
    const Vec& coords() const { return c_; }
    const Field& field() const { return *c_.front().field; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    // bitmask-lexicographic order; inherits the element order of the field
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);

private:
    Vec c_;
};

// Line in P^3 by normalized Plucker coordinates in the order
// (p01, p02, p03, p12, p13, p23).  In characteristic 2 all sign conventions
// collapse, so the relation reads p01*p23 + p02*p13 + p03*p12 = 0.
class PluckerLine {
public:
    explicit PluckerLine(std::array<FieldElem, 6> p);
    const std::array<FieldElem, 6>& p() const { return p_; }
    const Field& field() const { return *p_.front().field; }

    // Two independent points spanning the line.
    std::pair<ProjPoint, ProjPoint> span() const;

    friend bool operator==(const PluckerLine& a, const PluckerLine& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PluckerLine& a, const PluckerLine& b) { return !(a == b); }
    friend bool operator<(const PluckerLine& a, const PluckerLine& b);

private:
    std::array<FieldElem, 6> p_;
};

// Invertible matrix modulo scalars, normalized so the first nonzero entry in
// row-major order is 1.
class Projectivity {
public:
    explicit Projectivity(Mat m);
    static Projectivity identity(const Field& f, int n);
    const Mat& matrix() const { return m_; }
    int dim() const { return m_.rows() - 1; }
    const Field& field() const { return m_.field(); }

    ProjPoint operator()(const ProjPoint& x) const;
    PluckerLine operator()(const PluckerLine& l) const;

    // (a * b)(x) = a(b(x))
    friend Projectivity operator*(const Projectivity& a, const Projectivity& b);
    Projectivity inverse() const;
    bool is_identity() const;
    int order(int cap = 1 << 20) const;

    friend bool operator==(const Projectivity& a, const Projectivity& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Projectivity& a, const Projectivity& b) { return !(a == b); }
    friend bool operator<(const Projectivity& a, const Projectivity& b);

private:
    Mat m_;
};

PluckerLine line_through(const ProjPoint& p, const ProjPoint& q);
bool lines_meet(const PluckerLine& l1, const PluckerLine& l2);

// Intersection point of two distinct meeting lines.
ProjPoint line_intersection(const PluckerLine& l1, const PluckerLine& l2);

// The unique projectivity of P^3 with src[i] -> dst[i] for projective frames
// (no 4 of the 5 points on a hyperplane).
Projectivity projectivity_from_frames(const std::array<ProjPoint, 5>& src,
                                      const std::array<ProjPoint, 5>& dst);

// Canonical generator of an order-5 subgroup of PGL2 over f: diag(1, x) for a
// fifth root of unity x when one exists, else the companion matrix of
// T^2 + cT + 1 with c + c^-1-conjugate root structure pulled back from the
// degree-2 extension.
Projectivity pgl2_order5_rep(const Field& f);

// A scalar multiple M of the given 2x2 projectivity with M^5 literally the
// identity matrix.
Mat lift_to_order5(const Projectivity& a);

// All elements of PGL2(f); throws CapacityExceeded if q^3 - q > cap.
std::vector<Projectivity> enumerate_pgl2(const Field& f, uint64_t cap = 10'000'000);

} // namespace cubic27::proj
