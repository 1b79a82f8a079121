#pragma once

#include <initializer_list>
#include <vector>

#include "cubic27/gf2k.hpp"

namespace cubic27::matrix {

using gf2k::Field;
using gf2k::FieldElem;

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};
struct ShapeMismatch : Error {
    ShapeMismatch() : Error("matrix shapes are incompatible") {}
};

using Vec = std::vector<FieldElem>;

// Dense row-major matrix over one GF(2^k) spec.
class Mat {
public:
    Mat() = default;
    Mat(const Field& f, int rows, int cols);
    static Mat identity(const Field& f, int n);
    // Row-major entries given as generator-power literals is overkill here;
    // build from explicit elements instead.
    static Mat from_rows(const Field& f, std::initializer_list<std::initializer_list<FieldElem>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }

    FieldElem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldElem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.field_ == y.field_ && x.a_ == y.a_;
    }

private:
    const Field* field_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

Mat mul(const Mat& a, const Mat& b);
Vec mul(const Mat& a, const Vec& v);
Mat transpose(const Mat& a);
Mat add(const Mat& a, const Mat& b);

// Entry-wise x -> x^(2^j).
Mat frobenius(const Mat& a, int j);

// In-place reduction to reduced row echelon form; returns the rank.
// Pivot choice is deterministic: in each column, among the candidate rows the
// one whose entry has the smallest bitmask wins (lowest row index on ties).
int rref(Mat& m);

FieldElem det(Mat m);
Mat inverse(const Mat& a); // throws SingularMatrix

// Basis of the right kernel {v : a v = 0} read off the reduced echelon form,
// one vector per free column in ascending column order.
std::vector<Vec> kernel_basis(const Mat& a);

int rank(Mat m);

} // namespace cubic27::matrix
