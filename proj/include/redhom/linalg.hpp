#pragma once

// Dense exact linear algebra over the prime field GF(p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace redhom {

using Scalar = std::uint32_t;

/// Arithmetic in GF(p), 2 <= p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Scalar add(Scalar a, Scalar b) const {
        const Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Scalar inv(Scalar a) const;
    Scalar from_int(long long v) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Row-major dense matrix with entries in GF(p). 0×n and n×0 shapes are legal.
class Matrix {
public:
    Matrix() : Matrix(0, 0, 2) {}
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n, std::uint32_t p);
    /// Builds from signed integers, reducing each entry mod p.
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p);
    static Matrix column_vector(std::span<const Scalar> v, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<Scalar> column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return data_; }

    bool is_zero() const;
    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Scalar s) const;
    /// this += s * other
    void add_scaled(const Matrix& other, Scalar s);

    Matrix select_columns(std::span<const std::size_t> idx) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<Scalar> data_;
};

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, std::uint32_t p);
Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, std::uint32_t p);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks, std::uint32_t p);

/// Reduced row echelon form; pivots[i] is the pivot column of row i.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Matrix a);
std::size_t rank(const Matrix& a);

/// Columns form a basis of ker A, one per free variable in increasing order,
/// with that free variable set to 1 and the others to 0.
Matrix kernel_basis(const Matrix& a);

/// Particular solution of A·X = B with all free variables zero, or nullopt.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Indices of the leftmost maximal linearly independent set of columns.
std::vector<std::size_t> independent_columns(const Matrix& a);

/// Basis of the column space, taken from the columns of A themselves.
Matrix column_space(const Matrix& a);

/// L with L·K = I for K of full column rank.
Matrix left_inverse(const Matrix& k);

std::optional<Matrix> inverse(const Matrix& a);

/// dim(span(A) + span(B)) == dim span(A) tests containment of span(B) in span(A).
bool column_span_contains(const Matrix& a, const Matrix& b);

}  // namespace redhom
