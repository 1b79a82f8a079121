#include "cubic27/quadric.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "cubic27/matrix.hpp"
#include "cubic27/proj.hpp"

namespace cubic27::quadric {

P1 P1::of(const FieldElem& x, const FieldElem& y) {
    if (x.is_zero() && y.is_zero()) throw proj::ZeroVector();
    if (!x.is_zero()) {
        const FieldElem s = gf2k::inv(x);
        return {x * s, y * s};
    }
    return {x, y * gf2k::inv(y)};
}

M2 M2::of(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
    if ((a * d + b * c).is_zero()) throw matrix::SingularMatrix();
    const FieldElem* lead = &a;
    if (lead->is_zero()) lead = &b;
    if (lead->is_zero()) lead = &c;
    if (lead->is_zero()) lead = &d;
    const FieldElem s = gf2k::inv(*lead);
    return {a * s, b * s, c * s, d * s};
}

M2 M2::identity(const Field& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }

M2 M2::diag(const FieldElem& a, const FieldElem& b) {
    return of(a, a.field->zero(), a.field->zero(), b);
}

M2 M2::companion(const FieldElem& trace) {
    const Field& f = *trace.field;
    return of(trace, f.one(), f.one(), f.zero());
}

P1 M2::apply(const P1& p) const {
    return P1::of(e00 * p.a + e01 * p.b, e10 * p.a + e11 * p.b);
}

M2 M2::times(const M2& o) const {
    return of(e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
              e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11);
}

M2 M2::inverse() const {
    // adjugate; the determinant scalar is irrelevant in PGL2
    return of(e11, e01, e10, e00);
}

M2 M2::frobenius(int j) const {
    return of(gf2k::frobenius(e00, j), gf2k::frobenius(e01, j), gf2k::frobenius(e10, j),
              gf2k::frobenius(e11, j));
}

bool M2::is_identity() const {
    return e00.is_one() && e01.is_zero() && e10.is_zero() && e11.is_one();
}

bool operator<(const M2& x, const M2& y) {
    if (x.e00.bits != y.e00.bits) return x.e00.bits < y.e00.bits;
    if (x.e01.bits != y.e01.bits) return x.e01.bits < y.e01.bits;
    if (x.e10.bits != y.e10.bits) return x.e10.bits < y.e10.bits;
    return x.e11.bits < y.e11.bits;
}

QuadricModel QuadricModel::split(const Field& f) { return {Kind::Split, &f, &f}; }

QuadricModel QuadricModel::weil(const Field& base_field) {
    return {Kind::WeilRestriction, &base_field, &Field::get(2 * base_field.degree())};
}

namespace {

std::vector<P1> p1_points(const Field& f) {
    std::vector<P1> out;
    out.reserve(f.size() + 1);
    for (uint32_t b = 0; b < f.size(); ++b) out.push_back(P1{f.one(), f.elem(b)});
    out.push_back(P1{f.zero(), f.one()});
    std::sort(out.begin(), out.end());
    return out;
}

// Galois conjugation over the base field on extension coordinates
P1 conj(const QuadricModel& m, const P1& p) {
    return P1::of(gf2k::frobenius(p.a, m.base->degree()),
                  gf2k::frobenius(p.b, m.base->degree()));
}

} // namespace

std::vector<QPoint> points(const QuadricModel& m) {
    std::vector<QPoint> out;
    if (m.kind == QuadricModel::Kind::Split) {
        const auto line = p1_points(*m.base);
        if (line.size() * line.size() > 1000) throw Capacity();
        for (const P1& u : line)
            for (const P1& v : line) out.push_back({u, v});
    } else {
        const auto line = p1_points(*m.ext);
        if (line.size() > 1000) throw Capacity();
        for (const P1& u : line) out.push_back({u, u});
    }
    return out;
}

QPoint act(const QuadricModel& m, const QAut& g, const QPoint& p) {
    if (m.kind == QuadricModel::Kind::Split) {
        const P1 au = g.a.apply(p.u);
        const P1 bv = g.b.apply(p.v);
        return g.flip ? QPoint{bv, au} : QPoint{au, bv};
    }
    P1 u = g.a.apply(p.u);
    if (g.flip) u = conj(m, u);
    return {u, u};
}

QAut compose(const QuadricModel& m, const QAut& g1, const QAut& g2) {
    if (m.kind == QuadricModel::Kind::Split) {
        QAut out;
        out.a = g2.flip ? g1.b.times(g2.a) : g1.a.times(g2.a);
        out.b = g2.flip ? g1.a.times(g2.b) : g1.b.times(g2.b);
        out.flip = g1.flip != g2.flip;
        return out;
    }
    QAut out;
    out.a = g2.flip ? g1.a.frobenius(m.base->degree()).times(g2.a) : g1.a.times(g2.a);
    out.b = M2::identity(*m.ext);
    out.flip = g1.flip != g2.flip;
    return out;
}

QAut aut_inverse(const QuadricModel& m, const QAut& g) {
    if (m.kind == QuadricModel::Kind::Split) {
        if (!g.flip) return {g.a.inverse(), g.b.inverse(), false};
        return {g.b.inverse(), g.a.inverse(), true};
    }
    if (!g.flip) return {g.a.inverse(), g.b, false};
    return {g.a.inverse().frobenius(m.base->degree()), g.b, true};
}

QAut aut_identity(const QuadricModel& m) {
    return {M2::identity(*m.ext), M2::identity(*m.ext), false};
}

int aut_order(const QuadricModel& m, const QAut& g) {
    QAut x = g;
    const QAut e = aut_identity(m);
    for (int n = 1; n <= 10000; ++n) {
        if (x == e) return n;
        x = compose(m, g, x);
    }
    throw Capacity();
}

std::pair<P1, P1> base_change(const QuadricModel& m, const QPoint& p) {
    if (m.kind == QuadricModel::Kind::Split) return {p.u, p.v};
    return {p.u, conj(m, p.u)};
}

bool is_general_position(const QuadricModel& m, const std::array<QPoint, 5>& pts) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (pts[i] == pts[j]) throw DuplicatePoints();

    const Field& f = m.working_field();
    std::array<std::pair<P1, P1>, 5> bc;
    for (int i = 0; i < 5; ++i) bc[i] = base_change(m, pts[i]);

    // no 2 points on a common ruling
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (bc[i].first == bc[j].first || bc[i].second == bc[j].second) return false;

    // no 4 points on a divisor of bidegree (1,1): determinant over the
    // monomials u0v0, u0v1, u1v0, u1v1
    for (int skip = 0; skip < 5; ++skip) {
        matrix::Mat mat(f, 4, 4);
        int r = 0;
        for (int i = 0; i < 5; ++i) {
            if (i == skip) continue;
            const auto& [u, v] = bc[i];
            mat.at(r, 0) = u.a * v.a;
            mat.at(r, 1) = u.a * v.b;
            mat.at(r, 2) = u.b * v.a;
            mat.at(r, 3) = u.b * v.b;
            ++r;
        }
        if (matrix::det(mat).is_zero()) return false;
    }
    return true;
}

std::vector<QAut> order5_reps(const QuadricModel& m) {
    const Field& f = m.working_field();
    if (m.kind == QuadricModel::Kind::Split) {
        if (f.degree() % 2 != 0) throw NoOrderFive();
        const auto roots = gf2k::fifth_roots(f);
        std::vector<QAut> out;
        if (!roots.empty()) {
            const FieldElem xi = roots.front();
            for (int j = 2; j <= 4; ++j)
                out.push_back(
                    {M2::diag(f.one(), xi), M2::diag(f.one(), gf2k::pow(xi, j)), false});
            return out;
        }
        const Field& ext2 = Field::get(2 * f.degree());
        const auto pair = gf2k::quadratic_pair(ext2);
        const FieldElem c = gf2k::unembed(f, ext2, pair.first);
        const FieldElem c2 = gf2k::unembed(f, ext2, pair.second);
        out.push_back({M2::companion(c), M2::companion(c2), false});
        out.push_back({M2::companion(c2), M2::companion(c), false});
        return out;
    }
    // restriction model: the companion trace is the canonical quadratic-pair
    // element, which always lives in the degree-2 subfield GF(4)
    const Field& f4 = Field::get(2);
    const Field& f16 = Field::get(4);
    const FieldElem c4 = gf2k::unembed(f4, f16, gf2k::quadratic_pair(f16).first);
    const FieldElem c = gf2k::embed(f4, f, c4);
    return {QAut{M2::companion(c), M2::identity(f), false}};
}

std::array<QPoint, 5> orbit_of(const QuadricModel& m, const QAut& g, const QPoint& p) {
    if (aut_order(m, g) != 5) throw NoOrderFive();
    std::array<QPoint, 5> out{p, p, p, p, p};
    QPoint x = p;
    for (int i = 1; i < 5; ++i) {
        x = act(m, g, x);
        if (x == p) throw ShortOrbit();
        out[i] = x;
    }
    return out;
}

std::vector<QAut> enumerate_aut(const QuadricModel& m, uint64_t cap) {
    const Field& f = m.working_field();
    const uint64_t q = f.size();
    const uint64_t pgl = q * q * q - q;
    auto all_m2 = [&] {
        std::vector<M2> out;
        out.reserve(pgl);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                for (uint32_t c = 0; c < q; ++c)
                    for (uint32_t d = 0; d < q; ++d) {
                        const uint32_t lead = a ? a : b ? b : c ? c : d;
                        if (lead != 1) continue;
                        const FieldElem fa = f.elem(a), fb = f.elem(b), fc = f.elem(c),
                                        fd = f.elem(d);
                        if ((fa * fd + fb * fc).is_zero()) continue;
                        out.push_back(M2{fa, fb, fc, fd});
                    }
        return out;
    };

    std::vector<QAut> out;
    if (m.kind == QuadricModel::Kind::Split) {
        if (2 * pgl * pgl > cap) throw Capacity();
        const std::vector<M2> mats = all_m2();
        out.reserve(2 * mats.size() * mats.size());
        for (const M2& a : mats)
            for (const M2& b : mats)
                for (bool flip : {false, true}) out.push_back({a, b, flip});
        return out;
    }
    if (2 * pgl > cap) throw Capacity();
    const std::vector<M2> mats = all_m2();
    out.reserve(2 * mats.size());
    const M2 id = M2::identity(f);
    for (const M2& a : mats)
        for (bool flip : {false, true}) out.push_back({a, id, flip});
    return out;
}

namespace {

std::array<QPoint, 5> sorted_orbit(std::array<QPoint, 5> o) {
    std::sort(o.begin(), o.end());
    return o;
}

std::vector<uint32_t> encode(const std::array<QPoint, 5>& o) {
    std::vector<uint32_t> key;
    key.reserve(20);
    for (const QPoint& p : o) {
        key.push_back(p.u.a.bits);
        key.push_back(p.u.b.bits);
        key.push_back(p.v.a.bits);
        key.push_back(p.v.b.bits);
    }
    return key;
}

// all general-position orbits of one order-5 element, as sorted point sets
std::vector<std::array<QPoint, 5>> gp_orbits_of(const QuadricModel& m, const QAut& g,
                                                const std::vector<QPoint>& pts) {
    std::set<std::array<QPoint, 5>> seen;
    for (const QPoint& p : pts) {
        try {
            auto orbit = sorted_orbit(orbit_of(m, g, p));
            if (seen.count(orbit)) continue;
            if (is_general_position(m, orbit)) seen.insert(orbit);
        } catch (const ShortOrbit&) {
            continue;
        }
    }
    return {seen.begin(), seen.end()};
}

// the unique projective map with [1:0],[0:1],[1:1] -> p1,p2,p3
M2 map_from_standard_triple(const P1& p1, const P1& p2, const P1& p3) {
    const Field& f = *p1.a.field;
    matrix::Mat m(f, 2, 2);
    m.at(0, 0) = p1.a;
    m.at(0, 1) = p2.a;
    m.at(1, 0) = p1.b;
    m.at(1, 1) = p2.b;
    matrix::Mat rhs(f, 2, 1);
    rhs.at(0, 0) = p3.a;
    rhs.at(1, 0) = p3.b;
    const matrix::Mat lam = matrix::mul(matrix::inverse(m), rhs);
    if (lam.at(0, 0).is_zero() || lam.at(1, 0).is_zero()) throw matrix::SingularMatrix();
    return M2::of(p1.a * lam.at(0, 0), p2.a * lam.at(1, 0), p1.b * lam.at(0, 0),
                  p2.b * lam.at(1, 0));
}

M2 map_triple(const std::array<P1, 3>& src, const std::array<P1, 3>& dst) {
    const M2 a = map_from_standard_triple(src[0], src[1], src[2]);
    const M2 b = map_from_standard_triple(dst[0], dst[1], dst[2]);
    return b.times(a.inverse());
}

bool try_candidate(const QuadricModel& m, const QAut& g, const std::array<QPoint, 5>& o1,
                   const std::array<QPoint, 5>& o2) {
    std::array<QPoint, 5> image;
    for (int i = 0; i < 5; ++i) image[i] = act(m, g, o1[i]);
    std::sort(image.begin(), image.end());
    return image == o2;
}

} // namespace

bool orbits_equivalent(const QuadricModel& m, const std::array<QPoint, 5>& o1raw,
                       const std::array<QPoint, 5>& o2raw) {
    const std::array<QPoint, 5> o1 = sorted_orbit(o1raw);
    const std::array<QPoint, 5> o2 = sorted_orbit(o2raw);
    if (o1 == o2) return true;

    // an automorphism sending o1 to o2 is pinned by the images of three
    // points; try all ordered target triples and both swap components
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (j == i) continue;
            for (int k = 0; k < 5; ++k) {
                if (k == i || k == j) continue;
                const std::array<const QPoint*, 3> img = {&o2[i], &o2[j], &o2[k]};
                for (bool flip : {false, true}) {
                    try {
                        QAut g;
                        g.flip = flip;
                        if (m.kind == QuadricModel::Kind::Split) {
                            // with a factor swap the first output coordinate
                            // is b(v), so a must hit the swapped targets
                            const std::array<P1, 3> src_u = {o1[0].u, o1[1].u, o1[2].u};
                            const std::array<P1, 3> src_v = {o1[0].v, o1[1].v, o1[2].v};
                            std::array<P1, 3> dst_a, dst_b;
                            for (int s = 0; s < 3; ++s) {
                                dst_a[s] = flip ? img[s]->v : img[s]->u;
                                dst_b[s] = flip ? img[s]->u : img[s]->v;
                            }
                            g.a = map_triple(src_u, dst_a);
                            g.b = map_triple(src_v, dst_b);
                        } else {
                            const std::array<P1, 3> src_u = {o1[0].u, o1[1].u, o1[2].u};
                            std::array<P1, 3> dst;
                            for (int s = 0; s < 3; ++s)
                                dst[s] = flip ? conj(m, img[s]->u) : img[s]->u;
                            g.a = map_triple(src_u, dst);
                            g.b = M2::identity(*m.ext);
                        }
                        if (try_candidate(m, g, o1, o2)) return true;
                    } catch (const matrix::SingularMatrix&) {
                        continue;
                    } catch (const proj::ZeroVector&) {
                        continue;
                    }
                }
            }
        }
    return false;
}

int count_orbit_classes(const QuadricModel& m) {
    const std::vector<QPoint> pts = points(m);

    bool full_enumeration = true;
    std::vector<QAut> all;
    try {
        all = enumerate_aut(m);
    } catch (const Capacity&) {
        full_enumeration = false;
    }

    std::vector<std::array<QPoint, 5>> gp_orbits;
    {
        std::set<std::array<QPoint, 5>> seen;
        std::vector<QAut> gens;
        if (full_enumeration) {
            for (const QAut& g : all)
                if (aut_order(m, g) == 5) gens.push_back(g);
        } else {
            // diagonalizable case: every order-5 subgroup is conjugate to a
            // diagonal-pair type, including the one-sided degenerate types
            if (m.kind != QuadricModel::Kind::Split) throw Capacity();
            const Field& f = m.working_field();
            const auto roots = gf2k::fifth_roots(f);
            if (roots.empty()) throw Capacity();
            const FieldElem xi = roots.front();
            const M2 one = M2::identity(f);
            const M2 d = M2::diag(f.one(), xi);
            gens.push_back({d, one, false});
            gens.push_back({one, d, false});
            for (int j = 1; j <= 4; ++j)
                gens.push_back({d, M2::diag(f.one(), gf2k::pow(xi, j)), false});
        }
        for (const QAut& g : gens)
            for (const auto& orbit : gp_orbits_of(m, g, pts)) seen.insert(orbit);
        gp_orbits.assign(seen.begin(), seen.end());
    }
    if (gp_orbits.empty()) return 0;

    if (full_enumeration) {
        // canonical form: minimum encoding over the automorphism group
        std::set<std::vector<uint32_t>> canon;
        for (const auto& orbit : gp_orbits) {
            std::vector<uint32_t> best = encode(orbit);
            for (const QAut& g : all) {
                std::array<QPoint, 5> image;
                for (int i = 0; i < 5; ++i) image[i] = act(m, g, orbit[i]);
                std::sort(image.begin(), image.end());
                std::vector<uint32_t> key = encode(image);
                if (key < best) best = std::move(key);
            }
            canon.insert(std::move(best));
        }
        return static_cast<int>(canon.size());
    }

    // transporter-based partition for the reduced case
    std::vector<int> cls(gp_orbits.size(), -1);
    int classes = 0;
    for (size_t i = 0; i < gp_orbits.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = classes++;
        for (size_t j = i + 1; j < gp_orbits.size(); ++j) {
            if (cls[j] >= 0) continue;
            if (orbits_equivalent(m, gp_orbits[i], gp_orbits[j])) cls[j] = cls[i];
        }
    }
    return classes;
}

} // namespace cubic27::quadric
