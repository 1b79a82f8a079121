#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubic27/picweyl.hpp"
#include "cubic27/proj.hpp"

namespace cubic27::cubic {

using gf2k::Field;
using gf2k::FieldElem;
using proj::PluckerLine;
using proj::Projectivity;
using proj::ProjPoint;

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& m) : Error("syntax error: " + m) {}
};
struct WrongDegree : Error {
    WrongDegree() : Error("every term must have total degree 3") {}
};
struct ZeroForm : Error {
    ZeroForm() : Error("the form is identically zero") {}
};
struct SplitCap : Error {
    SplitCap() : Error("lines do not split within the field cap q^m <= 64") {}
};
struct NotSmooth : Error {
    NotSmooth() : Error("surface violates the 27-line configuration") {}
};
struct LabelingFailed : Error {
    LabelingFailed() : Error("no consistent class labeling exists") {}
};
struct FrameNotFound : Error {
    FrameNotFound() : Error("no projective frame among the line intersection points") {}
};

// Exponent vectors of the 20 degree-3 monomials in x,y,z,t, graded-lex with
// x > y > z > t.
const std::array<std::array<int, 4>, 20>& cubic_monomials();

// Homogeneous cubic form in 4 variables, 20 coefficients in the fixed
// monomial order, normalized so the first nonzero coefficient is 1.
class CubicForm {
public:
    CubicForm(const Field& f, std::array<FieldElem, 20> coeffs);
    const Field& field() const { return *field_; }
    const std::array<FieldElem, 20>& coeffs() const { return c_; }
    std::string to_string() const;

    friend bool operator==(const CubicForm& a, const CubicForm& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CubicForm& a, const CubicForm& b) { return !(a == b); }

private:
    const Field* field_;
    std::array<FieldElem, 20> c_;
};

// Grammar: sum of terms; term = factors joined by '*'; factor = variable
// x|y|z|t with optional ^exponent, or a coefficient literal 0 | 1 | g | g^j.
// Whitespace is ignored.
CubicForm parse_cubic(const std::string& text, const Field& f);

FieldElem evaluate(const CubicForm& c, const std::array<FieldElem, 4>& pt);
CubicForm embed_form(const CubicForm& c, const Field& super);
// F composed with the matrix action: (transform(F,T))(x) = F(T x).
CubicForm transform(const CubicForm& c, const Projectivity& t);
// True when transform(dst, t) equals src up to the scalar normalization,
// i.e. t maps the src surface onto the dst surface.
bool maps_onto(const CubicForm& src, const CubicForm& dst, const Projectivity& t);

// Singular point detection over one coefficient extension.
bool has_rational_singular_point(const CubicForm& c, const Field& ext);
// No singular point over any extension within the degree-12 tower, and the
// line configuration is a valid 27-line graph.
bool is_smooth(const CubicForm& c);

struct Line {
    PluckerLine pl;
    ProjPoint a, b; // spanning points
    Line(PluckerLine l, ProjPoint p, ProjPoint q)
        : pl(std::move(l)), a(std::move(p)), b(std::move(q)) {}
};

struct SurfaceLines {
    const Field* base = nullptr;
    const Field* split = nullptr;
    int split_degree = 0;
    std::vector<Line> lines;              // exactly 27, sorted by coordinates
    std::array<uint32_t, 27> adj{};       // adjacency bitmasks
    std::array<int, 27> label{};          // line index -> standard class index
    std::array<int, 27> line_of_class{};  // inverse of label
    bool labeled = false;

    bool adjacent(int i, int j) const { return (adj[i] >> j) & 1u; }
    int index_of(const PluckerLine& l) const; // -1 if absent
};

// Minimal splitting field search (m = 1, 2, ... with q^m <= 64) and chart
// enumeration of all lines on the surface.
SurfaceLines find_lines(const CubicForm& c);
// Chooses the first 6-coclique as exceptional classes and labels the rest by
// adjacency pattern; verifies the transported pairing.
SurfaceLines label_lines(SurfaceLines sl);
// find_lines + label_lines
SurfaceLines lines_with_labels(const CubicForm& c);

struct GaloisImage {
    permgrp::Perm line_perm;  // on line indices
    permgrp::Perm class_perm; // transported through the labeling
    int order = 1;
    picweyl::Classification cls;
    int fixed_lines = 27;
};

GaloisImage galois_image(const CubicForm& c, const SurfaceLines& sl);

struct AutGroup {
    std::vector<Projectivity> elements;      // over the base field
    std::vector<permgrp::Perm> line_perms;   // aligned with elements
    permgrp::GroupHandle handle;             // generated by the line perms
    std::string label;
};

AutGroup automorphisms(const CubicForm& c, const SurfaceLines& sl);
AutGroup automorphisms(const CubicForm& c);

// Independent oracle over GF(2): scans all 20160 invertible 4x4 matrices.
std::vector<Projectivity> gl4_f2_automorphism_scan(const CubicForm& c);

std::optional<Projectivity> is_isomorphic(const CubicForm& c1, const CubicForm& c2);

// Sample of distinct points lying on the surface (from the line spans).
std::vector<ProjPoint> surface_points(const SurfaceLines& sl, int count);

} // namespace cubic27::cubic
