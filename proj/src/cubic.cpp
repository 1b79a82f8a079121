#include "cubic27/cubic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>

namespace cubic27::cubic {

using matrix::Mat;
using matrix::Vec;
using permgrp::Perm;

// ---------------------------------------------------------------------------
// monomial tables

namespace {

std::vector<std::array<int, 4>> monomials_of_degree(int d) {
    std::vector<std::array<int, 4>> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
    return out;
}

// packed exponent key -> index within the degree table
int pack(const std::array<int, 4>& e) { return ((e[0] * 4 + e[1]) * 4 + e[2]) * 4 + e[3]; }

struct MonoTables {
    std::array<std::vector<std::array<int, 4>>, 4> monos; // degree 0..3
    std::array<std::vector<int>, 4> index;                // pack -> idx
    MonoTables() {
        for (int d = 0; d <= 3; ++d) {
            monos[d] = monomials_of_degree(d);
            index[d].assign(256, -1);
            for (size_t i = 0; i < monos[d].size(); ++i)
                index[d][pack(monos[d][i])] = static_cast<int>(i);
        }
    }
};

const MonoTables& tables() {
    static const MonoTables t;
    return t;
}

// multiply a degree-d coefficient vector by a linear form
std::vector<FieldElem> lin_mul(int d, const std::vector<FieldElem>& coeffs,
                               const std::array<FieldElem, 4>& lin, const Field& f) {
    const auto& t = tables();
    std::vector<FieldElem> out(t.monos[d + 1].size(), f.zero());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (int v = 0; v < 4; ++v) {
            if (lin[v].is_zero()) continue;
            std::array<int, 4> e = t.monos[d][i];
            ++e[v];
            const int j = t.index[d + 1][pack(e)];
            out[j] = out[j] + coeffs[i] * lin[v];
        }
    }
    return out;
}

} // namespace

const std::array<std::array<int, 4>, 20>& cubic_monomials() {
    static const std::array<std::array<int, 4>, 20> m = [] {
        std::array<std::array<int, 4>, 20> out{};
        const auto v = monomials_of_degree(3);
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }();
    return m;
}

// ---------------------------------------------------------------------------
// CubicForm

CubicForm::CubicForm(const Field& f, std::array<FieldElem, 20> coeffs)
    : field_(&f), c_(std::move(coeffs)) {
    for (auto& e : c_)
        if (e.field != field_) throw gf2k::MismatchedSpecs();
    for (const auto& e : c_) {
        if (e.is_zero()) continue;
        const FieldElem s = gf2k::inv(e);
        for (auto& x : c_) x = x * s;
        return;
    }
    throw ZeroForm();
}

std::string CubicForm::to_string() const {
    static const char* vars = "xyzt";
    std::string out;
    const auto& monos = cubic_monomials();
    for (int i = 0; i < 20; ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string term;
        if (!c_[i].is_one()) term = field_->literal(c_[i]);
        for (int v = 0; v < 4; ++v) {
            const int e = monos[i][v];
            if (e == 0) continue;
            if (!term.empty()) term += "*";
            term += vars[v];
            if (e > 1) term += "^" + std::to_string(e);
        }
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return s[i];
    }
    char take() {
        skip();
        return s[i++];
    }
};

long parse_uint(Cursor& cur) {
    cur.skip();
    if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        throw SyntaxError("expected a number");
    long v = 0;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        v = v * 10 + (cur.s[cur.i] - '0');
        if (v > 1'000'000) throw SyntaxError("exponent too large");
        ++cur.i;
    }
    return v;
}

} // namespace

CubicForm parse_cubic(const std::string& text, const Field& f) {
    Cursor cur{text};
    std::array<FieldElem, 20> acc;
    acc.fill(f.zero());
    const auto& t = tables();

    if (cur.done()) throw SyntaxError("empty input");
    bool first_term = true;
    while (!cur.done()) {
        if (!first_term) {
            if (cur.take() != '+') throw SyntaxError("expected '+'");
        }
        first_term = false;

        FieldElem coeff = f.one();
        std::array<int, 4> exps{0, 0, 0, 0};
        bool first_factor = true;
        while (true) {
            if (!first_factor) {
                if (cur.done() || cur.peek() != '*') break;
                cur.take();
            }
            first_factor = false;
            if (cur.done()) throw SyntaxError("missing factor");
            const char c = cur.take();
            int var = -1;
            switch (c) {
                case 'x': var = 0; break;
                case 'y': var = 1; break;
                case 'z': var = 2; break;
                case 't': var = 3; break;
                case '0': coeff = f.zero(); continue;
                case '1': continue;
                case 'g': {
                    long j = 1;
                    if (!cur.done() && cur.peek() == '^') {
                        cur.take();
                        j = parse_uint(cur);
                    }
                    coeff = coeff * f.gen_pow(j);
                    continue;
                }
                default:
                    throw SyntaxError(std::string("unexpected character '") + c + "'");
            }
            long e = 1;
            if (!cur.done() && cur.peek() == '^') {
                cur.take();
                e = parse_uint(cur);
            }
            if (e > 3) throw WrongDegree();
            exps[var] += static_cast<int>(e);
            if (exps[var] > 3) throw WrongDegree();
        }
        if (exps[0] + exps[1] + exps[2] + exps[3] != 3) throw WrongDegree();
        const int idx = t.index[3][pack(exps)];
        acc[idx] = acc[idx] + coeff;
    }
    return CubicForm(f, acc); // throws ZeroForm when everything cancelled
}

// ---------------------------------------------------------------------------
// evaluation and transformation

FieldElem evaluate(const CubicForm& c, const std::array<FieldElem, 4>& pt) {
    const Field& f = c.field();
    FieldElem pw[4][4];
    for (int v = 0; v < 4; ++v) {
        pw[v][0] = f.one();
        for (int e = 1; e <= 3; ++e) pw[v][e] = pw[v][e - 1] * pt[v];
    }
    FieldElem acc = f.zero();
    const auto& monos = cubic_monomials();
    for (int i = 0; i < 20; ++i) {
        if (c.coeffs()[i].is_zero()) continue;
        FieldElem term = c.coeffs()[i];
        for (int v = 0; v < 4; ++v)
            if (monos[i][v]) term = term * pw[v][monos[i][v]];
        acc = acc + term;
    }
    return acc;
}

CubicForm embed_form(const CubicForm& c, const Field& super) {
    if (&c.field() == &super) return c;
    std::array<FieldElem, 20> out;
    for (int i = 0; i < 20; ++i) out[i] = gf2k::embed(c.field(), super, c.coeffs()[i]);
    return CubicForm(super, out);
}

CubicForm transform(const CubicForm& c, const Projectivity& t) {
    if (&c.field() != &t.field() || t.dim() != 3) throw matrix::ShapeMismatch();
    const Field& f = c.field();
    const auto& monos = cubic_monomials();
    std::array<std::array<FieldElem, 4>, 4> rows;
    for (int v = 0; v < 4; ++v)
        for (int j = 0; j < 4; ++j) rows[v][j] = t.matrix().at(v, j);

    std::vector<FieldElem> out(20, f.zero());
    for (int i = 0; i < 20; ++i) {
        if (c.coeffs()[i].is_zero()) continue;
        std::vector<FieldElem> cur{f.one()};
        int deg = 0;
        for (int v = 0; v < 4; ++v)
            for (int e = 0; e < monos[i][v]; ++e) {
                cur = lin_mul(deg, cur, rows[v], f);
                ++deg;
            }
        for (int j = 0; j < 20; ++j) out[j] = out[j] + c.coeffs()[i] * cur[j];
    }
    std::array<FieldElem, 20> arr;
    std::copy(out.begin(), out.end(), arr.begin());
    return CubicForm(f, arr);
}

bool maps_onto(const CubicForm& src, const CubicForm& dst, const Projectivity& t) {
    return transform(dst, t) == src;
}

// ---------------------------------------------------------------------------
// smoothness

namespace {

// one partial derivative: 10 degree-2 monomial coefficients
struct QuadForm {
    const Field* f;
    std::array<FieldElem, 10> c;
    bool zero() const {
        for (const auto& e : c)
            if (!e.is_zero()) return false;
        return true;
    }
};

QuadForm partial_derivative(const CubicForm& c, int var) {
    const auto& t = tables();
    const Field& f = c.field();
    QuadForm q{&f, {}};
    q.c.fill(f.zero());
    for (int i = 0; i < 20; ++i) {
        const auto& e = t.monos[3][i];
        if (e[var] % 2 == 0) continue; // characteristic 2
        std::array<int, 4> d = e;
        --d[var];
        const int j = t.index[2][pack(d)];
        q.c[j] = q.c[j] + c.coeffs()[i];
    }
    return q;
}

FieldElem eval_quad(const QuadForm& q, const std::array<FieldElem, 4>& pt) {
    const auto& t = tables();
    FieldElem acc = q.f->zero();
    for (int i = 0; i < 10; ++i) {
        if (q.c[i].is_zero()) continue;
        FieldElem term = q.c[i];
        const auto& e = t.monos[2][i];
        for (int v = 0; v < 4; ++v)
            for (int j = 0; j < e[v]; ++j) term = term * pt[v];
        acc = acc + term;
    }
    return acc;
}

// Artin-Schreier root table: as_root[u] = some s with s^2 + s = u, else -1
const std::vector<int32_t>& as_table(const Field& f) {
    static std::map<int, std::vector<int32_t>> cache;
    auto it = cache.find(f.degree());
    if (it != cache.end()) return it->second;
    std::vector<int32_t> t(f.size(), -1);
    for (uint32_t s = 0; s < f.size(); ++s) {
        const FieldElem x = f.elem(s);
        t[(x * x + x).bits] = static_cast<int32_t>(s);
    }
    return cache.emplace(f.degree(), std::move(t)).first->second;
}

struct QuadSolutions {
    bool all_t = false;
    int count = 0;
    FieldElem sol[2];
};

// solutions of a*T^2 + b*T + c = 0 over f
QuadSolutions solve_quadratic(const Field& f, const FieldElem& a, const FieldElem& b,
                              const FieldElem& c) {
    QuadSolutions out;
    if (a.is_zero()) {
        if (b.is_zero()) {
            if (c.is_zero()) out.all_t = true;
            return out;
        }
        out.sol[out.count++] = c * gf2k::inv(b);
        return out;
    }
    if (b.is_zero()) {
        // T^2 = c/a has the unique root (c/a)^(2^(k-1))
        out.sol[out.count++] = gf2k::frobenius(c * gf2k::inv(a), f.degree() - 1);
        return out;
    }
    const FieldElem binv = gf2k::inv(b);
    const FieldElem d = c * a * binv * binv;
    const int32_t s = as_table(f)[d.bits];
    if (s < 0) return out;
    const FieldElem scale = b * gf2k::inv(a);
    out.sol[out.count++] = scale * f.elem(static_cast<uint32_t>(s));
    out.sol[out.count++] = scale * (f.elem(static_cast<uint32_t>(s)) + f.one());
    return out;
}

} // namespace

bool has_rational_singular_point(const CubicForm& c, const Field& ext) {
    const CubicForm ce = embed_form(c, ext);
    const Field& f = ext;
    std::array<QuadForm, 4> parts = {partial_derivative(ce, 0), partial_derivative(ce, 1),
                                     partial_derivative(ce, 2), partial_derivative(ce, 3)};
    int lead = -1;
    for (int v = 0; v < 4; ++v)
        if (!parts[v].zero()) {
            lead = v;
            break;
        }
    assert(lead >= 0); // a nonzero cubic in characteristic 2 has a nonzero partial

    const auto& t = tables();
    const QuadForm& q = parts[lead];
    const FieldElem qa = q.c[t.index[2][pack({0, 0, 0, 2})]];
    const std::array<FieldElem, 3> qlin = {q.c[t.index[2][pack({1, 0, 0, 1})]],
                                           q.c[t.index[2][pack({0, 1, 0, 1})]],
                                           q.c[t.index[2][pack({0, 0, 1, 1})]]};

    auto is_common_zero = [&](const std::array<FieldElem, 4>& pt) {
        for (int v = 0; v < 4; ++v)
            if (!eval_quad(parts[v], pt).is_zero()) return false;
        return true;
    };

    // charts by the position of the first nonzero coordinate; the last
    // coordinate is solved from the leading partial
    for (int p = 0; p < 4; ++p) {
        std::array<FieldElem, 4> pt = {f.zero(), f.zero(), f.zero(), f.zero()};
        pt[p] = f.one();
        if (p == 3) {
            if (is_common_zero(pt)) return true;
            continue;
        }
        const int free_lo = p + 1;
        std::vector<uint32_t> free_vals(2 - p, 0);
        while (true) {
            for (int i = 0; i < 2 - p; ++i) pt[free_lo + i] = f.elem(free_vals[i]);
            FieldElem b = f.zero();
            for (int u = 0; u < 3; ++u)
                if (!pt[u].is_zero()) b = b + qlin[u] * pt[u];
            pt[3] = f.zero();
            const FieldElem cc = eval_quad(q, pt);
            const QuadSolutions sols = solve_quadratic(f, qa, b, cc);
            if (sols.all_t) {
                for (uint32_t tv = 0; tv < f.size(); ++tv) {
                    pt[3] = f.elem(tv);
                    if (is_common_zero(pt)) return true;
                }
            } else {
                for (int s = 0; s < sols.count; ++s) {
                    pt[3] = sols.sol[s];
                    if (is_common_zero(pt)) return true;
                }
            }
            int pos = 2 - p - 1;
            while (pos >= 0 && ++free_vals[pos] == f.size()) free_vals[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return false;
}

bool is_smooth(const CubicForm& c) {
    const int k = c.field().degree();
    for (int m = 1; k * m <= gf2k::Field::kMaxDegree; ++m)
        if (has_rational_singular_point(c, Field::get(k * m))) return false;
    try {
        (void)find_lines(c);
    } catch (const NotSmooth&) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// line enumeration

namespace {

// on-surface test for the line spanned by u and v: all four coefficients of
// F(s*u + w*v) as a binary cubic in (s,w) must vanish
bool line_on_surface(const CubicForm& c, const Vec& u, const Vec& v) {
    const Field& f = c.field();
    const auto& monos = cubic_monomials();
    FieldElem acc[4] = {f.zero(), f.zero(), f.zero(), f.zero()};
    for (int i = 0; i < 20; ++i) {
        if (c.coeffs()[i].is_zero()) continue;
        FieldElem poly[4] = {c.coeffs()[i], f.zero(), f.zero(), f.zero()};
        int deg = 0;
        for (int var = 0; var < 4; ++var)
            for (int e = 0; e < monos[i][var]; ++e) {
                FieldElem next[4] = {f.zero(), f.zero(), f.zero(), f.zero()};
                for (int d = 0; d <= deg; ++d) {
                    if (poly[d].is_zero()) continue;
                    next[d + 1] = next[d + 1] + poly[d] * u[var];
                    next[d] = next[d] + poly[d] * v[var];
                }
                ++deg;
                for (int d = 0; d <= deg; ++d) poly[d] = next[d];
            }
        for (int d = 0; d < 4; ++d) acc[d] = acc[d] + poly[d];
    }
    return acc[0].is_zero() && acc[1].is_zero() && acc[2].is_zero() && acc[3].is_zero();
}

std::vector<Line> lines_over(const CubicForm& c) {
    const Field& f = c.field();
    const uint32_t q = f.size();
    std::vector<Line> out;

    for (int p1 = 0; p1 < 4; ++p1) {
        for (int p2 = p1 + 1; p2 < 4; ++p2) {
            // reduced-echelon chart: row0 leads at p1 (zero at p2), row1 at p2
            std::vector<int> free0, free1;
            for (int col = 0; col < 4; ++col) {
                if (col == p1 || col == p2) continue;
                if (col > p1) free0.push_back(col);
                if (col > p2) free1.push_back(col);
            }
            // rows whose point already lies on the surface; the line test
            // below only needs to look at these
            auto surface_rows = [&](int lead, const std::vector<int>& free) {
                std::vector<Vec> rows;
                std::vector<uint32_t> vals(free.size(), 0);
                while (true) {
                    Vec row(4, f.zero());
                    row[lead] = f.one();
                    for (size_t i = 0; i < free.size(); ++i) row[free[i]] = f.elem(vals[i]);
                    if (evaluate(c, {row[0], row[1], row[2], row[3]}).is_zero())
                        rows.push_back(std::move(row));
                    int pos = static_cast<int>(free.size()) - 1;
                    while (pos >= 0 && ++vals[pos] == q) vals[pos--] = 0;
                    if (pos < 0) break;
                }
                return rows;
            };
            const std::vector<Vec> rows0 = surface_rows(p1, free0);
            const std::vector<Vec> rows1 = surface_rows(p2, free1);
            for (const Vec& u : rows0)
                for (const Vec& v : rows1) {
                    if (!line_on_surface(c, u, v)) continue;
                    ProjPoint a{u}, b{v};
                    out.emplace_back(proj::line_through(a, b), a, b);
                }
        }
    }
    std::sort(out.begin(), out.end(), [](const Line& a, const Line& b) { return a.pl < b.pl; });
    return out;
}

} // namespace

int SurfaceLines::index_of(const PluckerLine& l) const {
    for (int i = 0; i < static_cast<int>(lines.size()); ++i)
        if (lines[i].pl == l) return i;
    return -1;
}

SurfaceLines find_lines(const CubicForm& c) {
    const int k = c.field().degree();
    for (int m = 1;; ++m) {
        const uint64_t qm = 1ull << (k * m);
        if (qm > 64) throw SplitCap();
        const Field& ext = Field::get(k * m);
        const CubicForm ce = embed_form(c, ext);
        std::vector<Line> lines = lines_over(ce);
        if (lines.size() < 27) continue;
        if (lines.size() > 27) throw NotSmooth();

        SurfaceLines sl;
        sl.base = &c.field();
        sl.split = &ext;
        sl.split_degree = m;
        sl.lines = std::move(lines);
        for (int i = 0; i < 27; ++i) {
            uint32_t mask = 0;
            for (int j = 0; j < 27; ++j) {
                if (i == j) continue;
                if (proj::lines_meet(sl.lines[i].pl, sl.lines[j].pl)) mask |= 1u << j;
            }
            sl.adj[i] = mask;
        }
        for (int i = 0; i < 27; ++i)
            if (__builtin_popcount(sl.adj[i]) != 10) throw NotSmooth();
        sl.label.fill(-1);
        sl.line_of_class.fill(-1);
        return sl;
    }
}

// ---------------------------------------------------------------------------
// labeling

namespace {

// lexicographically first 6 pairwise non-adjacent lines
bool sixer_search(const SurfaceLines& sl, int start, std::array<int, 6>& acc, int depth) {
    if (depth == 6) return true;
    for (int i = start; i < 27; ++i) {
        bool ok = true;
        for (int d = 0; d < depth; ++d)
            if (sl.adjacent(acc[d], i)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        acc[depth] = i;
        if (sixer_search(sl, i + 1, acc, depth + 1)) return true;
    }
    return false;
}

int lij_class_index(int i, int j) { // 0-based i < j
    return 6 + i * 5 - i * (i - 1) / 2 + (j - i - 1);
}

} // namespace

SurfaceLines label_lines(SurfaceLines sl) {
    std::array<int, 6> sixer{};
    if (!sixer_search(sl, 0, sixer, 0)) throw LabelingFailed();

    sl.label.fill(-1);
    for (int i = 0; i < 6; ++i) sl.label[sixer[i]] = i; // E1..E6

    for (int u = 0; u < 27; ++u) {
        if (sl.label[u] >= 0) continue;
        std::vector<int> hits;
        for (int i = 0; i < 6; ++i)
            if (sl.adjacent(u, sixer[i])) hits.push_back(i);
        if (hits.size() == 2) {
            sl.label[u] = lij_class_index(hits[0], hits[1]);
        } else if (hits.size() == 5) {
            int missing = 15;
            for (int h : hits) missing -= h;
            sl.label[u] = 21 + missing;
        } else {
            throw LabelingFailed();
        }
    }
    sl.line_of_class.fill(-1);
    for (int i = 0; i < 27; ++i) {
        if (sl.label[i] < 0 || sl.line_of_class[sl.label[i]] != -1) throw LabelingFailed();
        sl.line_of_class[sl.label[i]] = i;
    }
    // adjacency must transport to pairing 1
    const auto& classes = picweyl::standard_classes();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            const int64_t pr = picweyl::pairing(classes[sl.label[i]], classes[sl.label[j]]);
            if ((pr == 1) != sl.adjacent(i, j)) throw LabelingFailed();
        }
    sl.labeled = true;
    return sl;
}

SurfaceLines lines_with_labels(const CubicForm& c) { return label_lines(find_lines(c)); }

// ---------------------------------------------------------------------------
// Galois image

GaloisImage galois_image(const CubicForm& c, const SurfaceLines& sl) {
    if (!sl.labeled) throw LabelingFailed();
    const int k = c.field().degree();
    GaloisImage out;
    out.line_perm.img.resize(27);
    for (int i = 0; i < 27; ++i) {
        std::array<FieldElem, 6> p;
        for (int j = 0; j < 6; ++j) p[j] = gf2k::frobenius(sl.lines[i].pl.p()[j], k);
        const int target = sl.index_of(PluckerLine(p));
        if (target < 0) throw NotSmooth(); // the line set is Galois stable
        out.line_perm.img[i] = static_cast<uint8_t>(target);
    }
    out.class_perm.img.resize(27);
    for (int i = 0; i < 27; ++i)
        out.class_perm.img[sl.label[i]] = static_cast<uint8_t>(sl.label[out.line_perm(i)]);
    out.order = out.line_perm.order();
    if (out.order != sl.split_degree) throw NotSmooth();
    out.cls = picweyl::classify(out.class_perm);
    out.fixed_lines = 0;
    for (int i = 0; i < 27; ++i)
        if (out.line_perm(i) == i) ++out.fixed_lines;
    return out;
}

// ---------------------------------------------------------------------------
// automorphisms and isomorphisms

namespace {

struct IntersectionTable {
    std::array<int, 27 * 27> idx; // -1 for non-adjacent pairs
    std::vector<ProjPoint> pts;
};

IntersectionTable intersection_points(const SurfaceLines& sl) {
    IntersectionTable t;
    t.idx.fill(-1);
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            if (!sl.adjacent(i, j)) continue;
            ProjPoint p = proj::line_intersection(sl.lines[i].pl, sl.lines[j].pl);
            t.idx[i * 27 + j] = t.idx[j * 27 + i] = static_cast<int>(t.pts.size());
            t.pts.push_back(std::move(p));
        }
    return t;
}

struct Frame {
    std::array<ProjPoint, 5> pts;
    std::array<std::pair<int, int>, 5> provenance; // line pairs
};

bool independent4(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                  const ProjPoint& d) {
    const Field& f = a.field();
    Mat m(f, 4, 4);
    const ProjPoint* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = pts[i]->coords()[j];
    return !matrix::det(m).is_zero();
}

// lexicographically first 5 intersection points forming a projective frame
Frame find_frame(const SurfaceLines& sl, const IntersectionTable& table) {
    std::vector<std::pair<ProjPoint, std::pair<int, int>>> pts;
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            const int id = table.idx[i * 27 + j];
            if (id < 0) continue;
            pts.emplace_back(table.pts[id], std::make_pair(i, j));
        }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              pts.end());

    const int n = static_cast<int>(pts.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (!independent4(pts[a].first, pts[b].first, pts[c].first, pts[d].first))
                        continue;
                    for (int e = d + 1; e < n; ++e) {
                        if (!independent4(pts[a].first, pts[b].first, pts[c].first,
                                          pts[e].first))
                            continue;
                        if (!independent4(pts[a].first, pts[b].first, pts[d].first,
                                          pts[e].first))
                            continue;
                        if (!independent4(pts[a].first, pts[c].first, pts[d].first,
                                          pts[e].first))
                            continue;
                        if (!independent4(pts[b].first, pts[c].first, pts[d].first,
                                          pts[e].first))
                            continue;
                        return Frame{{pts[a].first, pts[b].first, pts[c].first, pts[d].first,
                                      pts[e].first},
                                     {pts[a].second, pts[b].second, pts[c].second,
                                      pts[d].second, pts[e].second}};
                    }
                }
    throw FrameNotFound();
}

bool entries_in_subfield(const Mat& m, int sub_degree) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (gf2k::frobenius(m.at(i, j), sub_degree) != m.at(i, j)) return false;
    return true;
}

bool point_on_line(const ProjPoint& p, const Line& l) {
    if (p == l.a || p == l.b) return true;
    return proj::line_through(p, l.a) == l.pl;
}

// t maps line i onto line pi(i) for every i
bool induces_line_perm(const Projectivity& t, const SurfaceLines& sl, const Perm& pi) {
    for (int i = 0; i < 27; ++i) {
        const Line& src = sl.lines[i];
        const Line& dst = sl.lines[pi(i)];
        if (!point_on_line(t(src.a), dst) || !point_on_line(t(src.b), dst)) return false;
    }
    return true;
}

Projectivity unembed_projectivity(const Projectivity& t, const Field& base) {
    const Field& ext = t.field();
    if (&ext == &base) return t;
    Mat m(base, t.matrix().rows(), t.matrix().cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = gf2k::unembed(base, ext, t.matrix().at(i, j));
    return Projectivity(std::move(m));
}

} // namespace

std::vector<ProjPoint> surface_points(const SurfaceLines& sl, int count) {
    std::vector<ProjPoint> out;
    for (const Line& l : sl.lines) {
        for (const ProjPoint* p : {&l.a, &l.b}) {
            if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
            if (static_cast<int>(out.size()) >= count) return out;
        }
    }
    return out;
}

AutGroup automorphisms(const CubicForm& c, const SurfaceLines& sl) {
    if (!sl.labeled) throw LabelingFailed();
    const Field& ext = *sl.split;
    const Field& base = c.field();
    const CubicForm ce = embed_form(c, ext);
    const IntersectionTable table = intersection_points(sl);
    const Frame frame = find_frame(sl, table);
    const GaloisImage gal = galois_image(c, sl);
    const std::vector<ProjPoint> samples = surface_points(sl, 8);

    AutGroup out;
    for (const Perm& w : picweyl::weyl_group().elements()) {
        // candidate line permutation transported through the labeling
        Perm pi;
        pi.img.resize(27);
        for (int i = 0; i < 27; ++i)
            pi.img[i] = static_cast<uint8_t>(sl.line_of_class[w(sl.label[i])]);

        std::array<ProjPoint, 5> images = frame.pts;
        bool degenerate = false;
        for (int k5 = 0; k5 < 5; ++k5) {
            const auto [li, lj] = frame.provenance[k5];
            const int id = table.idx[pi(li) * 27 + pi(lj)];
            if (id < 0) {
                degenerate = true;
                break;
            }
            images[k5] = table.pts[id];
        }
        if (degenerate) continue;

        Projectivity t = Projectivity::identity(ext, 3);
        try {
            t = proj::projectivity_from_frames(frame.pts, images);
        } catch (const proj::DegenerateFrame&) {
            continue;
        }

        bool on_surface = true;
        for (const ProjPoint& s : samples) {
            const ProjPoint img = t(s);
            if (!evaluate(ce, {img.coords()[0], img.coords()[1], img.coords()[2],
                               img.coords()[3]})
                     .is_zero()) {
                on_surface = false;
                break;
            }
        }
        if (!on_surface) continue;
        if (transform(ce, t) != ce) continue;
        if (!entries_in_subfield(t.matrix(), base.degree())) continue;
        // distinct candidates can agree on the frame when intersection points
        // coincide; keep only the pair whose line action matches
        if (!induces_line_perm(t, sl, pi)) continue;

        if (!pi.commutes_with(gal.line_perm))
            throw Error("automorphism does not commute with the Galois action");
        if (pi.is_identity() && !t.is_identity())
            throw Error("line representation is not faithful");

        out.elements.push_back(unembed_projectivity(t, base));
        out.line_perms.push_back(std::move(pi));
    }
    out.handle = permgrp::GroupHandle::from_elements(out.line_perms, /*verify=*/true);
    if (out.handle.order() != out.line_perms.size())
        throw Error("line permutations do not form a closed group");
    out.label = permgrp::identify_group(out.handle);
    return out;
}

AutGroup automorphisms(const CubicForm& c) { return automorphisms(c, lines_with_labels(c)); }

std::vector<Projectivity> gl4_f2_automorphism_scan(const CubicForm& c) {
    const Field& f = c.field();
    if (f.degree() != 1) throw Error("exhaustive matrix scan is specific to GF(2)");
    std::vector<Projectivity> out;
    for (uint32_t mask = 1; mask < (1u << 16); ++mask) {
        Mat m(f, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (mask & (1u << (i * 4 + j))) m.at(i, j) = f.one();
        if (matrix::det(m).is_zero()) continue;
        Projectivity t{std::move(m)};
        if (transform(c, t) == c) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Projectivity> is_isomorphic(const CubicForm& c1, const CubicForm& c2) {
    if (&c1.field() != &c2.field()) throw gf2k::MismatchedSpecs();
    const Field& base = c1.field();
    const SurfaceLines sl1 = lines_with_labels(c1);
    const SurfaceLines sl2 = lines_with_labels(c2);
    // a base-field isomorphism preserves the minimal splitting degree
    if (sl1.split_degree != sl2.split_degree) return std::nullopt;
    const Field& ext = *sl1.split;
    const CubicForm ce1 = embed_form(c1, ext);
    const CubicForm ce2 = embed_form(c2, ext);
    const IntersectionTable table2 = intersection_points(sl2);
    const Frame frame = find_frame(sl1, intersection_points(sl1));
    const std::vector<ProjPoint> samples = surface_points(sl1, 8);

    for (const Perm& w : picweyl::weyl_group().elements()) {
        std::array<int, 27> pi{};
        for (int i = 0; i < 27; ++i) pi[i] = sl2.line_of_class[w(sl1.label[i])];

        std::array<ProjPoint, 5> images = frame.pts;
        bool degenerate = false;
        for (int k5 = 0; k5 < 5; ++k5) {
            const auto [li, lj] = frame.provenance[k5];
            const int id = table2.idx[pi[li] * 27 + pi[lj]];
            if (id < 0) {
                degenerate = true;
                break;
            }
            images[k5] = table2.pts[id];
        }
        if (degenerate) continue;

        Projectivity t = Projectivity::identity(ext, 3);
        try {
            t = proj::projectivity_from_frames(frame.pts, images);
        } catch (const proj::DegenerateFrame&) {
            continue;
        }

        bool on_surface = true;
        for (const ProjPoint& s : samples) {
            const ProjPoint img = t(s);
            if (!evaluate(ce2, {img.coords()[0], img.coords()[1], img.coords()[2],
                                img.coords()[3]})
                     .is_zero()) {
                on_surface = false;
                break;
            }
        }
        if (!on_surface) continue;
        if (transform(ce2, t) != ce1) continue;
        if (!entries_in_subfield(t.matrix(), base.degree())) continue;
        return unembed_projectivity(t, base);
    }
    return std::nullopt;
}

} // namespace cubic27::cubic
