#include "cubic27/proj.hpp"

#include <algorithm>
#include <cassert>

namespace cubic27::proj {

namespace {

Vec normalize_vec(Vec c) {
    if (c.empty()) throw ZeroVector();
    for (const auto& e : c) {
        if (!e.is_zero()) {
            const FieldElem s = gf2k::inv(e);
            for (auto& x : c) x = x * s;
            return c;
        }
    }
    throw ZeroVector();
}

bool vec_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].bits != b[i].bits) return a[i].bits < b[i].bits;
    }
    return a.size() < b.size();
}

// Plucker index order (01,02,03,12,13,23) as coordinate pairs.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

} // namespace

ProjPoint::ProjPoint(Vec coords) : c_(normalize_vec(std::move(coords))) {}

bool operator<(const ProjPoint& a, const ProjPoint& b) { return vec_less(a.c_, b.c_); }

PluckerLine::PluckerLine(std::array<FieldElem, 6> p) {
    Vec v(p.begin(), p.end());
    v = normalize_vec(std::move(v));
    std::copy(v.begin(), v.end(), p_.begin());
    const FieldElem rel = p_[0] * p_[5] + p_[1] * p_[4] + p_[2] * p_[3];
    if (!rel.is_zero()) throw BadPlucker();
}

bool operator<(const PluckerLine& a, const PluckerLine& b) {
    for (int i = 0; i < 6; ++i)
        if (a.p_[i].bits != b.p_[i].bits) return a.p_[i].bits < b.p_[i].bits;
    return false;
}

std::pair<ProjPoint, ProjPoint> PluckerLine::span() const {
    // The 4x4 matrix with entries p_ij (symmetric, zero diagonal in
    // characteristic 2) has rank 2 and its column space is the line.
    const Field& f = field();
    Mat m(f, 4, 4);
    for (int idx = 0; idx < 6; ++idx) {
        m.at(kPairs[idx][0], kPairs[idx][1]) = p_[idx];
        m.at(kPairs[idx][1], kPairs[idx][0]) = p_[idx];
    }
    std::optional<ProjPoint> first;
    for (int j = 0; j < 4; ++j) {
        Vec col(4, f.zero());
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
            col[i] = m.at(i, j);
            nonzero = nonzero || !col[i].is_zero();
        }
        if (!nonzero) continue;
        ProjPoint pt{col};
        if (!first) {
            first = pt;
        } else if (pt != *first) {
            return {*first, pt};
        }
    }
    throw ZeroVector();
}

Projectivity::Projectivity(Mat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw matrix::ShapeMismatch();
    if (matrix::det(m_).is_zero()) throw matrix::SingularMatrix();
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = 0; j < m_.cols(); ++j) {
            if (!m_.at(i, j).is_zero()) {
                const FieldElem s = gf2k::inv(m_.at(i, j));
                for (int r = 0; r < m_.rows(); ++r)
                    for (int c = 0; c < m_.cols(); ++c) m_.at(r, c) = m_.at(r, c) * s;
                return;
            }
        }
}

Projectivity Projectivity::identity(const Field& f, int n) {
    return Projectivity(Mat::identity(f, n + 1));
}

ProjPoint Projectivity::operator()(const ProjPoint& x) const {
    return ProjPoint(matrix::mul(m_, x.coords()));
}

PluckerLine Projectivity::operator()(const PluckerLine& l) const {
    // Induced action on the second exterior power: conjugate the symmetric
    // coordinate matrix by the projectivity.
    const Field& f = field();
    Mat p(f, 4, 4);
    for (int idx = 0; idx < 6; ++idx) {
        p.at(kPairs[idx][0], kPairs[idx][1]) = l.p()[idx];
        p.at(kPairs[idx][1], kPairs[idx][0]) = l.p()[idx];
    }
    const Mat q = matrix::mul(matrix::mul(m_, p), matrix::transpose(m_));
    std::array<FieldElem, 6> out;
    for (int idx = 0; idx < 6; ++idx) out[idx] = q.at(kPairs[idx][0], kPairs[idx][1]);
    return PluckerLine(out);
}

Projectivity operator*(const Projectivity& a, const Projectivity& b) {
    return Projectivity(matrix::mul(a.m_, b.m_));
}

Projectivity Projectivity::inverse() const { return Projectivity(matrix::inverse(m_)); }

bool Projectivity::is_identity() const {
    return m_ == Mat::identity(field(), m_.rows());
}

int Projectivity::order(int cap) const {
    Projectivity x = *this;
    for (int n = 1; n <= cap; ++n) {
        if (x.is_identity()) return n;
        x = x * *this;
    }
    throw CapacityExceeded();
}

bool operator<(const Projectivity& a, const Projectivity& b) {
    for (int i = 0; i < a.m_.rows(); ++i)
        for (int j = 0; j < a.m_.cols(); ++j) {
            if (a.m_.at(i, j).bits != b.m_.at(i, j).bits)
                return a.m_.at(i, j).bits < b.m_.at(i, j).bits;
        }
    return false;
}

PluckerLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw EqualPoints();
    const Vec& a = p.coords();
    const Vec& b = q.coords();
    std::array<FieldElem, 6> out;
    for (int idx = 0; idx < 6; ++idx) {
        const int i = kPairs[idx][0], j = kPairs[idx][1];
        out[idx] = a[i] * b[j] + a[j] * b[i];
    }
    return PluckerLine(out);
}

bool lines_meet(const PluckerLine& l1, const PluckerLine& l2) {
    const auto& p = l1.p();
    const auto& q = l2.p();
    const FieldElem pairing = p[0] * q[5] + p[1] * q[4] + p[2] * q[3] +
                              p[3] * q[2] + p[4] * q[1] + p[5] * q[0];
    return pairing.is_zero();
}

ProjPoint line_intersection(const PluckerLine& l1, const PluckerLine& l2) {
    if (l1 == l2) throw EqualPoints();
    if (!lines_meet(l1, l2)) throw Error("lines are skew");
    const Field& f = l1.field();
    auto [a1, b1] = l1.span();
    auto [a2, b2] = l2.span();
    Mat m(f, 4, 4);
    for (int i = 0; i < 4; ++i) {
        m.at(i, 0) = a1.coords()[i];
        m.at(i, 1) = b1.coords()[i];
        m.at(i, 2) = a2.coords()[i];
        m.at(i, 3) = b2.coords()[i];
    }
    const auto kb = matrix::kernel_basis(m);
    assert(!kb.empty());
    const Vec& k = kb.front();
    Vec pt(4, f.zero());
    for (int i = 0; i < 4; ++i) pt[i] = k[0] * a1.coords()[i] + k[1] * b1.coords()[i];
    return ProjPoint(pt);
}

namespace {

// Matrix whose columns scale the standard frame e1..e4, e1+e2+e3+e4 onto the
// given five points.
Mat frame_matrix(const std::array<ProjPoint, 5>& pts) {
    const Field& f = pts[0].field();
    Mat m(f, 4, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m.at(i, j) = pts[j].coords()[i];
    Mat rhs(f, 4, 1);
    for (int i = 0; i < 4; ++i) rhs.at(i, 0) = pts[4].coords()[i];
    Mat lam;
    try {
        lam = matrix::mul(matrix::inverse(m), rhs);
    } catch (const matrix::SingularMatrix&) {
        throw DegenerateFrame();
    }
    Mat out(f, 4, 4);
    for (int j = 0; j < 4; ++j) {
        if (lam.at(j, 0).is_zero()) throw DegenerateFrame();
        for (int i = 0; i < 4; ++i) out.at(i, j) = m.at(i, j) * lam.at(j, 0);
    }
    return out;
}

} // namespace

Projectivity projectivity_from_frames(const std::array<ProjPoint, 5>& src,
                                      const std::array<ProjPoint, 5>& dst) {
    const Mat a = frame_matrix(src);
    const Mat b = frame_matrix(dst);
    return Projectivity(matrix::mul(b, matrix::inverse(a)));
}

Projectivity pgl2_order5_rep(const Field& f) {
    // |PGL2(2^k)| = q^3 - q is divisible by 5 exactly when k is even.
    if (f.degree() % 2 != 0) throw NoOrderFive();
    const auto roots = gf2k::fifth_roots(f);
    Mat m(f, 2, 2);
    if (!roots.empty()) {
        m.at(0, 0) = f.one();
        m.at(1, 1) = roots.front();
        return Projectivity(m);
    }
    const Field& ext = Field::get(2 * f.degree());
    const FieldElem c = gf2k::unembed(f, ext, gf2k::quadratic_pair(ext).first);
    m.at(0, 0) = c;
    m.at(0, 1) = f.one();
    m.at(1, 0) = f.one();
    return Projectivity(m);
}

Mat lift_to_order5(const Projectivity& a) {
    if (a.dim() != 1) throw matrix::ShapeMismatch();
    if (a.is_identity()) throw NotOrderFive();
    const Field& f = a.field();
    Mat p5 = a.matrix();
    for (int i = 1; i < 5; ++i) p5 = matrix::mul(p5, a.matrix());
    if (!p5.at(0, 1).is_zero() || !p5.at(1, 0).is_zero() || p5.at(0, 0) != p5.at(1, 1) ||
        p5.at(0, 0).is_zero())
        throw NotOrderFive();
    const FieldElem lambda = p5.at(0, 0);
    for (uint32_t b = 1; b < f.size(); ++b) {
        const FieldElem c = f.elem(b);
        if ((gf2k::pow(c, 5) * lambda).is_one()) {
            Mat m = a.matrix();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m.at(i, j) = m.at(i, j) * c;
            return m;
        }
    }
    throw NotOrderFive();
}

std::vector<Projectivity> enumerate_pgl2(const Field& f, uint64_t cap) {
    const uint64_t q = f.size();
    if (q * q * q - q > cap) throw CapacityExceeded();
    std::vector<Projectivity> out;
    out.reserve(q * q * q - q);
    // Normalized representatives: first nonzero entry in row-major order is 1.
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b)
            for (uint32_t c = 0; c < q; ++c)
                for (uint32_t d = 0; d < q; ++d) {
                    const uint32_t first = a ? a : b ? b : c ? c : d;
                    if (first != 1) continue;
                    Mat m(f, 2, 2);
                    m.at(0, 0) = f.elem(a);
                    m.at(0, 1) = f.elem(b);
                    m.at(1, 0) = f.elem(c);
                    m.at(1, 1) = f.elem(d);
                    if (matrix::det(m).is_zero()) continue;
                    out.emplace_back(std::move(m));
                }
    return out;
}

} // namespace cubic27::proj
