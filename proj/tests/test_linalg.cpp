#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redhom/error.hpp"
#include "support.hpp"

using namespace redhom;
using redhom::testing::random_matrix;

TEST_CASE("field arithmetic") {
    const PrimeField f(5);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.mul(4, 4) == 1);
    CHECK(f.inv(2) == 3);
    CHECK(f.from_int(-1) == 4);
    CHECK_THROWS_AS(PrimeField(4), ContractViolation);
    const PrimeField big(2147483647u);
    CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("kernel of identity and zero") {
    CHECK(kernel_basis(Matrix::identity(2, 5)).cols() == 0);
    CHECK(kernel_basis(Matrix::identity(2, 5)).rows() == 2);
    CHECK(kernel_basis(Matrix(2, 3, 5)) == Matrix::identity(3, 5));
}

TEST_CASE("kernel of a single row") {
    const Matrix a = Matrix::from_rows({{1, 2, 3}}, 5);
    const Matrix k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
    CHECK(rank(k) == 2);
    // free variables set to unit vectors in order
    CHECK(k == Matrix::from_rows({{3, 2}, {1, 0}, {0, 1}}, 5));
}

TEST_CASE("solve_linear") {
    const Matrix a = Matrix::from_rows({{1, 1}}, 5);
    auto x = solve_linear(a, Matrix::from_rows({{3}}, 5));
    REQUIRE(x);
    CHECK(*x == Matrix::from_rows({{3}, {0}}, 5));
    CHECK_FALSE(solve_linear(Matrix(1, 1, 5), Matrix::from_rows({{1}}, 5)));
    const Matrix b = Matrix::from_rows({{1, 2}, {3, 4}}, 7);
    CHECK(*solve_linear(Matrix::identity(2, 7), b) == b);
    CHECK_THROWS_AS(solve_linear(Matrix(2, 2, 7), Matrix(3, 1, 7)), ContractViolation);
}

TEST_CASE("empty shapes behave as zero maps") {
    const Matrix e(0, 3, 5);
    CHECK(rank(e) == 0);
    CHECK(kernel_basis(e) == Matrix::identity(3, 5));
    const Matrix f(3, 0, 5);
    CHECK(kernel_basis(f).cols() == 0);
    CHECK((f * Matrix(0, 2, 5)).is_zero());
    CHECK((f * Matrix(0, 2, 5)).rows() == 3);
}

TEST_CASE("mixed characteristic is rejected") {
    CHECK_THROWS_AS(Matrix::identity(2, 5) * Matrix::identity(2, 7), ContractViolation);
}

TEST_CASE("rank-nullity and solve round trip on random matrices") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 2147483647u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = rng() % 7, c = rng() % 7;
            const Matrix a = random_matrix(r, c, p, rng);
            const Matrix k = kernel_basis(a);
            CHECK(rank(a) + k.cols() == c);
            CHECK((a * k).is_zero());
            CHECK(rank(k) == k.cols());
            const Matrix x0 = random_matrix(c, 2, p, rng);
            auto x = solve_linear(a, a * x0);
            REQUIRE(x);
            CHECK(a * *x == a * x0);
        }
    }
}

TEST_CASE("determinism") {
    std::mt19937_64 rng(3);
    const Matrix a = random_matrix(6, 9, 5, rng);
    CHECK(kernel_basis(a) == kernel_basis(a));
    CHECK(row_reduce(a).reduced == row_reduce(a).reduced);
}

TEST_CASE("inverse and left inverse") {
    std::mt19937_64 rng(5);
    const Matrix s = redhom::testing::random_invertible(5, 7, rng);
    CHECK(*inverse(s) * s == Matrix::identity(5, 7));
    const Matrix tall = random_matrix(6, 3, 7, rng);
    if (rank(tall) == 3) CHECK(left_inverse(tall) * tall == Matrix::identity(3, 7));
    CHECK_FALSE(inverse(Matrix(2, 2, 7)));
}

TEST_CASE("column span containment") {
    const Matrix a = Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}, 5);
    CHECK(column_span_contains(a, Matrix::from_rows({{2}, {3}, {0}}, 5)));
    CHECK_FALSE(column_span_contains(a, Matrix::from_rows({{0}, {0}, {1}}, 5)));
}
