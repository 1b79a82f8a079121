#include "cubic27/matrix.hpp"

namespace cubic27::matrix {

Mat::Mat(const Field& f, int rows, int cols)
    : field_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

Mat Mat::identity(const Field& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Mat Mat::from_rows(const Field& f, std::initializer_list<std::initializer_list<FieldElem>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    Mat m(f, r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw ShapeMismatch();
        int j = 0;
        for (const auto& e : row) m.at(i, j++) = e;
        ++i;
    }
    return m;
}

Mat mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows() || &a.field() != &b.field()) throw ShapeMismatch();
    Mat r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const FieldElem aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

Vec mul(const Mat& a, const Vec& v) {
    if (a.cols() != static_cast<int>(v.size())) throw ShapeMismatch();
    Vec r(a.rows(), a.field().zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r[i] = r[i] + a.at(i, j) * v[j];
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Mat add(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch();
    Mat r(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Mat frobenius(const Mat& a, int j) {
    Mat r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int c = 0; c < a.cols(); ++c) r.at(i, c) = gf2k::frobenius(a.at(i, c), j);
    return r;
}

int rref(Mat& m) {
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int best = -1;
        for (int r = pivot_row; r < m.rows(); ++r) {
            const FieldElem& e = m.at(r, col);
            if (e.is_zero()) continue;
            if (best < 0 || e.bits < m.at(best, col).bits) best = r;
        }
        if (best < 0) continue;
        if (best != pivot_row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot_row, c), m.at(best, c));
        const FieldElem piv_inv = gf2k::inv(m.at(pivot_row, col));
        for (int c = col; c < m.cols(); ++c) m.at(pivot_row, c) = m.at(pivot_row, c) * piv_inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot_row) continue;
            const FieldElem f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) + f * m.at(pivot_row, c);
        }
        ++pivot_row;
    }
    return pivot_row;
}

int rank(Mat m) { return rref(m); }

FieldElem det(Mat m) {
    if (m.rows() != m.cols()) throw ShapeMismatch();
    const Field& f = m.field();
    FieldElem d = f.one();
    const int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return f.zero();
        if (piv != col)
            for (int c = 0; c < n; ++c) std::swap(m.at(col, c), m.at(piv, c)); // char 2: no sign
        d = d * m.at(col, col);
        const FieldElem piv_inv = gf2k::inv(m.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const FieldElem factor = m.at(r, col) * piv_inv;
            if (factor.is_zero()) continue;
            for (int c = col; c < n; ++c) m.at(r, c) = m.at(r, c) + factor * m.at(col, c);
        }
    }
    return d;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch();
    const int n = a.rows();
    Mat work(a.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work.at(i, j) = a.at(i, j);
        work.at(i, n + i) = a.field().one();
    }
    rref(work);
    // the left block must have reduced to the identity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool want_one = i == j;
            if (work.at(i, j).is_one() != want_one || (!want_one && !work.at(i, j).is_zero()))
                throw SingularMatrix();
        }
    Mat r(a.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = work.at(i, n + j);
    return r;
}

std::vector<Vec> kernel_basis(const Mat& a) {
    Mat m = a;
    rref(m);
    const Field& f = a.field();
    std::vector<int> pivot_of_col(a.cols(), -1);
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        if (!m.at(r, c).is_zero()) {
            pivot_of_col[c] = r;
            ++r;
        }
    }
    std::vector<Vec> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(a.cols(), f.zero());
        v[c] = f.one();
        for (int c2 = 0; c2 < c; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = m.at(pivot_of_col[c2], c); // char 2: -x = x
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cubic27::matrix
