#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic27/matrix.hpp"

using namespace cubic27;
using namespace cubic27::matrix;
using gf2k::Field;
using gf2k::FieldElem;

namespace {

Mat random_matrix(const Field& f, int r, int c, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, f.size() - 1);
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = f.elem(dist(rng));
    return m;
}

} // namespace

TEST_CASE("inverse round trip on random invertible matrices") {
    std::mt19937 rng(7);
    for (int k : {1, 2, 4}) {
        const Field& f = Field::get(k);
        for (int n : {2, 3, 4}) {
            int built = 0;
            while (built < 10) {
                Mat m = random_matrix(f, n, n, rng);
                if (det(m).is_zero()) continue;
                ++built;
                CHECK(mul(m, inverse(m)) == Mat::identity(f, n));
                CHECK(mul(inverse(m), m) == Mat::identity(f, n));
            }
        }
    }
}

TEST_CASE("inverting a singular matrix throws") {
    const Field& f = Field::get(1);
    Mat m(f, 3, 3);
    m.at(0, 0) = f.one();
    m.at(1, 0) = f.one(); // rank 1
    CHECK_THROWS_AS((void)inverse(m), SingularMatrix);
    CHECK(det(m).is_zero());
}

TEST_CASE("kernel vectors are killed by the matrix") {
    std::mt19937 rng(11);
    const Field& f = Field::get(4);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m = random_matrix(f, 3, 6, rng);
        auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == 6 - rank(m));
        for (const auto& v : basis) {
            auto image = mul(m, v);
            for (const auto& e : image) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("rref produces a reduced echelon form") {
    const Field& f = Field::get(2);
    const FieldElem u = f.elem(2);
    Mat m = Mat::from_rows(f, {{u, f.one(), f.zero()}, {u, u, u}, {f.zero(), u * u, u}});
    const int r = rref(m);
    CHECK(r == rank(m));
    // pivots are 1 and alone in their column
    int row = 0;
    for (int c = 0; c < m.cols() && row < r; ++c) {
        if (m.at(row, c).is_zero()) continue;
        CHECK(m.at(row, c).is_one());
        for (int i = 0; i < m.rows(); ++i)
            if (i != row) CHECK(m.at(i, c).is_zero());
        ++row;
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(23);
    const Field& f = Field::get(3);
    for (int trial = 0; trial < 25; ++trial) {
        Mat a = random_matrix(f, 4, 4, rng);
        Mat b = random_matrix(f, 4, 4, rng);
        CHECK(det(mul(a, b)) == det(a) * det(b));
    }
}
