#include "cubic27/picweyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cubic27::picweyl {

using permgrp::GroupHandle;
using permgrp::Perm;

int64_t pairing(const Pic& a, const Pic& b) {
    int64_t s = static_cast<int64_t>(a[0]) * b[0];
    for (int i = 1; i < 7; ++i) s -= static_cast<int64_t>(a[i]) * b[i];
    return s;
}

Pic canonical_class() { return {-3, 1, 1, 1, 1, 1, 1}; }

const std::array<Pic, 27>& standard_classes() {
    static const std::array<Pic, 27> classes = [] {
        std::array<Pic, 27> c{};
        int idx = 0;
        for (int i = 0; i < 6; ++i) { // E1..E6
            Pic v{};
            v[1 + i] = 1;
            c[idx++] = v;
        }
        for (int i = 0; i < 6; ++i) // L_ij = H - E_i - E_j, i < j
            for (int j = i + 1; j < 6; ++j) {
                Pic v{};
                v[0] = 1;
                v[1 + i] = -1;
                v[1 + j] = -1;
                c[idx++] = v;
            }
        for (int i = 0; i < 6; ++i) { // Q_i = 2H + E_i - sum E_j
            Pic v{};
            v[0] = 2;
            for (int j = 0; j < 6; ++j) v[1 + j] = -1;
            v[1 + i] += 1;
            c[idx++] = v;
        }
        return c;
    }();
    return classes;
}

const std::array<std::string, 27>& class_names() {
    static const std::array<std::string, 27> names = [] {
        std::array<std::string, 27> n;
        int idx = 0;
        for (int i = 0; i < 6; ++i) n[idx++] = "E" + std::to_string(i + 1);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                n[idx++] = "L" + std::to_string(i + 1) + std::to_string(j + 1);
        for (int i = 0; i < 6; ++i) n[idx++] = "Q" + std::to_string(i + 1);
        return n;
    }();
    return names;
}

int class_index(const Pic& c) {
    const auto& classes = standard_classes();
    for (int i = 0; i < 27; ++i)
        if (classes[i] == c) return i;
    return -1;
}

const std::vector<Pic>& roots() {
    static const std::vector<Pic> rs = [] {
        std::vector<Pic> out;
        const Pic k = canonical_class();
        Pic v{};
        // all coordinates lie in [-2,2] (Cauchy-Schwarz against the form)
        for (v[0] = -2; v[0] <= 2; ++v[0])
            for (v[1] = -2; v[1] <= 2; ++v[1])
                for (v[2] = -2; v[2] <= 2; ++v[2])
                    for (v[3] = -2; v[3] <= 2; ++v[3])
                        for (v[4] = -2; v[4] <= 2; ++v[4])
                            for (v[5] = -2; v[5] <= 2; ++v[5])
                                for (v[6] = -2; v[6] <= 2; ++v[6])
                                    if (pairing(k, v) == 0 && pairing(v, v) == -2)
                                        out.push_back(v);
        return out;
    }();
    return rs;
}

namespace {

Pic reflect(const Pic& x, const Pic& alpha) {
    const int64_t c = pairing(x, alpha);
    Pic y = x;
    for (int i = 0; i < 7; ++i) y[i] += static_cast<int>(c) * alpha[i];
    return y;
}

std::vector<Pic> simple_roots() {
    std::vector<Pic> out;
    for (int i = 0; i < 5; ++i) { // E_i - E_{i+1}
        Pic v{};
        v[1 + i] = 1;
        v[2 + i] = -1;
        out.push_back(v);
    }
    Pic v{}; // H - E1 - E2 - E3
    v[0] = 1;
    v[1] = v[2] = v[3] = -1;
    out.push_back(v);
    return out;
}

} // namespace

const GroupHandle& weyl_group() {
    static const GroupHandle w = [] {
        const auto& classes = standard_classes();
        std::vector<Perm> gens;
        for (const Pic& alpha : simple_roots()) {
            Perm p;
            p.img.resize(27);
            for (int i = 0; i < 27; ++i) {
                const int j = class_index(reflect(classes[i], alpha));
                assert(j >= 0);
                p.img[i] = static_cast<uint8_t>(j);
            }
            gens.push_back(std::move(p));
        }
        return GroupHandle::closure(std::move(gens), 100000);
    }();
    return w;
}

namespace {

// Basis of the lattice made of line classes: E1..E6 and L12.
const std::array<int, 7> kBasisClassIdx = {0, 1, 2, 3, 4, 5, 6};

// Exact rational used only while inverting the (unimodular) basis matrix.
struct Rat {
    int64_t n = 0, d = 1;
    static int64_t g(int64_t a, int64_t b) { return b ? g(b, a % b) : (a < 0 ? -a : a); }
    Rat norm() const {
        int64_t gg = g(n < 0 ? -n : n, d < 0 ? -d : d);
        if (gg == 0) return {0, 1};
        int64_t nn = n / gg, dd = d / gg;
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        return {nn, dd};
    }
    Rat operator*(const Rat& o) const { return Rat{n * o.n, d * o.d}.norm(); }
    Rat operator-(const Rat& o) const { return Rat{n * o.d - o.n * d, d * o.d}.norm(); }
    Rat inv() const { return Rat{d, n}.norm(); }
    bool zero() const { return n == 0; }
};

LatMat int_inverse(const LatMat& m) {
    std::array<std::array<Rat, 14>, 7> w{};
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) w[i][j] = Rat{m[i][j], 1};
        w[i][7 + i] = Rat{1, 1};
    }
    for (int col = 0; col < 7; ++col) {
        int piv = -1;
        for (int r = col; r < 7; ++r)
            if (!w[r][col].zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw NotPairingPreserving();
        std::swap(w[col], w[piv]);
        const Rat s = w[col][col].inv();
        for (int c = 0; c < 14; ++c) w[col][c] = w[col][c] * s;
        for (int r = 0; r < 7; ++r) {
            if (r == col || w[r][col].zero()) continue;
            const Rat f = w[r][col];
            for (int c = 0; c < 14; ++c) w[r][c] = w[r][c] - f * w[col][c];
        }
    }
    LatMat out{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const Rat v = w[i][7 + j].norm();
            if (v.d != 1) throw NotPairingPreserving();
            out[i][j] = v.n;
        }
    return out;
}

LatMat mat_mul(const LatMat& a, const LatMat& b) {
    LatMat r{};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 7; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

int64_t mat_det(LatMat m) {
    // fraction-free Bareiss
    int64_t prev = 1;
    int sign = 1;
    for (int col = 0; col < 7; ++col) {
        int piv = -1;
        for (int r = col; r < 7; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < 7; ++r) {
            for (int c = col + 1; c < 7; ++c)
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    return sign * m[6][6];
}

Pic apply_lat(const LatMat& m, const Pic& x) {
    Pic y{};
    for (int i = 0; i < 7; ++i) {
        int64_t s = 0;
        for (int j = 0; j < 7; ++j) s += m[i][j] * x[j];
        y[i] = static_cast<int>(s);
    }
    return y;
}

const LatMat& basis_inverse() {
    static const LatMat inv = [] {
        LatMat b{};
        const auto& classes = standard_classes();
        for (int j = 0; j < 7; ++j)
            for (int i = 0; i < 7; ++i) b[i][j] = classes[kBasisClassIdx[j]][i];
        return int_inverse(b);
    }();
    return inv;
}

} // namespace

LatMat perm_to_lattice(const Perm& p) {
    if (p.degree() != 27) throw NotPairingPreserving();
    const auto& classes = standard_classes();
    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j)
            if (pairing(classes[p(i)], classes[p(j)]) != pairing(classes[i], classes[j]))
                throw NotPairingPreserving();

    LatMat images{};
    for (int j = 0; j < 7; ++j) {
        const Pic& img = classes[p(kBasisClassIdx[j])];
        for (int i = 0; i < 7; ++i) images[i][j] = img[i];
    }
    const LatMat m = mat_mul(images, basis_inverse());

    for (int i = 0; i < 27; ++i)
        if (apply_lat(m, classes[i]) != classes[p(i)]) throw NotPairingPreserving();
    if (apply_lat(m, canonical_class()) != canonical_class()) throw NotPairingPreserving();
    const int64_t d = mat_det(m);
    if (d != 1 && d != -1) throw NotPairingPreserving();
    return m;
}

namespace {

using Poly = std::vector<int64_t>; // coefficients, low degree first

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_pow(const Poly& a, int e) {
    Poly r{1};
    for (int i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

// characteristic polynomial of a 7x7 integer matrix (monic, low degree first)
Poly charpoly(const LatMat& m) {
    // Faddeev-LeVerrier; the divisions are exact
    LatMat n{};
    for (int i = 0; i < 7; ++i) n[i][i] = 1;
    Poly c(8, 0);
    c[7] = 1;
    for (int k = 1; k <= 7; ++k) {
        const LatMat mk = mat_mul(m, n);
        int64_t tr = 0;
        for (int i = 0; i < 7; ++i) tr += mk[i][i];
        const int64_t ck = -tr / k;
        c[7 - k] = ck;
        n = mk;
        for (int i = 0; i < 7; ++i) n[i][i] += ck;
    }
    return c;
}

// synthetic division by (x - 1); the remainder must vanish
Poly divide_by_x_minus_1(const Poly& p) {
    Poly q(p.size() - 1, 0);
    int64_t acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        acc += p[i];
        q[i - 1] = acc;
    }
    if (acc + p[0] != 0) throw NotPairingPreserving();
    return q;
}

struct LabelPoly {
    ClassLabel label;
    Poly poly; // on the rank-6 orthogonal complement
};

const std::vector<LabelPoly>& label_table() {
    static const std::vector<LabelPoly> table = [] {
        const Poly xm1{-1, 1};
        const Poly xp1{1, 1};
        const Poly phi5{1, 1, 1, 1, 1}; // x^4+x^3+x^2+x+1
        std::vector<LabelPoly> t;
        t.push_back({ClassLabel::Identity, poly_pow(xm1, 6)});
        t.push_back({ClassLabel::A1, poly_mul(poly_pow(xm1, 5), xp1)});
        t.push_back({ClassLabel::A1x2, poly_mul(poly_pow(xm1, 4), poly_pow(xp1, 2))});
        t.push_back({ClassLabel::A1x3, poly_mul(poly_pow(xm1, 3), poly_pow(xp1, 3))});
        t.push_back({ClassLabel::A1x4, poly_mul(poly_pow(xm1, 2), poly_pow(xp1, 4))});
        t.push_back({ClassLabel::A4, poly_mul(poly_pow(xm1, 2), phi5)});
        t.push_back({ClassLabel::A4xA1, poly_mul(poly_mul(xm1, xp1), phi5)});
        return t;
    }();
    return table;
}

} // namespace

std::string Classification::name() const {
    switch (label) {
        case ClassLabel::Identity: return "identity";
        case ClassLabel::A1: return "A1";
        case ClassLabel::A1x2: return "A1^2";
        case ClassLabel::A1x3: return "A1^3";
        case ClassLabel::A1x4: return "A1^4";
        case ClassLabel::A4: return "A4";
        case ClassLabel::A4xA1: return "A4xA1";
        case ClassLabel::Other: return "other(" + std::to_string(elt_order) + ")";
    }
    return "other";
}

Classification classify(const Perm& p) {
    Classification out;
    out.elt_order = p.order();
    if (out.elt_order != 1 && out.elt_order != 2 && out.elt_order != 5 && out.elt_order != 10) {
        out.label = ClassLabel::Other;
        return out;
    }
    const Poly cp = divide_by_x_minus_1(charpoly(perm_to_lattice(p)));
    for (const auto& entry : label_table()) {
        if (entry.poly == cp) {
            out.label = entry.label;
            return out;
        }
    }
    out.label = ClassLabel::Other;
    return out;
}

std::vector<CensusRow> class_census() {
    const GroupHandle& w = weyl_group();
    std::vector<CensusRow> rows;
    for (const auto& cls : conjugacy_classes(w)) {
        const int ord = cls.rep.order();
        if (ord != 2 && ord != 5 && ord != 10) continue;
        CensusRow row;
        row.label = classify(cls.rep).name();
        row.elt_order = ord;
        row.size = cls.size;
        row.centralizer_order = permgrp::centralizer(w, cls.rep).order();
        // orbit-stabilizer consistency
        if (row.centralizer_order * row.size != w.order()) throw NotPairingPreserving();
        rows.push_back(row);
    }
    // the label must be constant across each class: sweep every element of
    // the tabulated orders once and compare the tallies
    std::map<std::string, uint64_t> counts;
    for (const Perm& g : weyl_group().elements()) {
        const int ord = g.order();
        if (ord != 2 && ord != 5 && ord != 10) continue;
        ++counts[classify(g).name()];
    }
    for (const auto& row : rows) {
        uint64_t total = 0;
        for (const auto& other : rows)
            if (other.label == row.label) total += other.size;
        if (counts[row.label] != total) throw NotPairingPreserving();
    }
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.elt_order != b.elt_order) return a.elt_order < b.elt_order;
        return a.label < b.label;
    });
    return rows;
}

InvolutionProfile fixed_line_profile(const Perm& p) {
    if (p.degree() != 27 || p.order() != 2) throw NotInvolution();
    const auto& classes = standard_classes();
    InvolutionProfile prof{0, 0, 0};
    for (int i = 0; i < 27; ++i) {
        const int j = p(i);
        if (j == i) {
            ++prof.fixed;
        } else if (j > i) {
            const int64_t pr = pairing(classes[i], classes[j]);
            if (pr == 0)
                ++prof.skew_pairs;
            else if (pr == 1)
                ++prof.meeting_pairs;
            else
                throw NotInvolution();
        }
    }
    assert(prof.fixed + 2 * (prof.skew_pairs + prof.meeting_pairs) == 27);
    return prof;
}

} // namespace cubic27::picweyl
