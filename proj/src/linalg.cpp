#include "redhom/linalg.hpp"

#include <algorithm>
#include <string>

#include "redhom/error.hpp"

namespace redhom {

namespace {

constexpr std::uint64_t kReduceThreshold = std::uint64_t{1} << 63;

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
    if (a.modulus() != b.modulus()) {
        throw ContractViolation(std::string(what) + ": operands live over different prime fields");
    }
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
        throw ContractViolation("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    }
}

Scalar PrimeField::inv(Scalar a) const {
    if (a == 0) throw ContractViolation("inverse of zero in GF(p)");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p_ - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p_;
        base = base * base % p_;
        e >>= 1U;
    }
    return static_cast<Scalar>(result);
}

Scalar PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ContractViolation("matrix entry count does not match shape");
    for (Scalar& v : data_) {
        if (v >= p) throw ContractViolation("matrix entry out of range for GF(p)");
    }
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
    const PrimeField f(p);
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), nc, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw ContractViolation("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = f.from_int(rows[r][c]);
    }
    return m;
}

Matrix Matrix::column_vector(std::span<const Scalar> v, std::uint32_t p) {
    return Matrix(v.size(), 1, p, std::vector<Scalar>(v.begin(), v.end()));
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar v) { return v == 0; });
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(*this, rhs, "matrix product");
    if (cols_ != rhs.rows_) throw ContractViolation("matrix product: inner dimensions differ");
    Matrix out(rows_, rhs.cols_, p_);
    if (rows_ == 0 || rhs.cols_ == 0 || cols_ == 0) return out;
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = (*this)(r, k);
            if (a == 0) continue;
            const Scalar* brow = rhs.data_.data() + k * rhs.cols_;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                acc[c] += a * brow[c];
                if (acc[c] >= kReduceThreshold) acc[c] %= p_;
            }
        }
        for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<Scalar>(acc[c] % p_);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_field(*this, rhs, "matrix sum");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContractViolation("matrix sum: shapes differ");
    Matrix out = *this;
    const PrimeField f(p_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_field(*this, rhs, "matrix difference");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContractViolation("matrix difference: shapes differ");
    Matrix out = *this;
    const PrimeField f(p_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(Scalar s) const {
    Matrix out = *this;
    const PrimeField f(p_);
    for (Scalar& v : out.data_) v = f.mul(v, s);
    return out;
}

void Matrix::add_scaled(const Matrix& other, Scalar s) {
    require_same_field(*this, other, "add_scaled");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ContractViolation("add_scaled: shapes differ");
    if (s == 0) return;
    const PrimeField f(p_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (other.data_[i] != 0) data_[i] = f.add(data_[i], f.mul(other.data_[i], s));
    }
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
    Matrix out(rows_, idx.size(), p_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
    }
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix out(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx[i] * cols_), cols_,
                    out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    }
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractViolation("block out of range");
    Matrix out(nr, nc, p_);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    }
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require_same_field(*this, b, "set_block");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ContractViolation("set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, std::uint32_t p) {
    std::size_t cols = 0;
    for (const auto& m : parts) {
        if (m.rows() != rows) throw ContractViolation("hstack: row counts differ");
        if (m.modulus() != p) throw ContractViolation("hstack: operands live over different prime fields");
        cols += m.cols();
    }
    Matrix out(rows, cols, p);
    std::size_t c0 = 0;
    for (const auto& m : parts) {
        out.set_block(0, c0, m);
        c0 += m.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, std::uint32_t p) {
    std::size_t rows = 0;
    for (const auto& m : parts) {
        if (m.cols() != cols) throw ContractViolation("vstack: column counts differ");
        if (m.modulus() != p) throw ContractViolation("vstack: operands live over different prime fields");
        rows += m.rows();
    }
    Matrix out(rows, cols, p);
    std::size_t r0 = 0;
    for (const auto& m : parts) {
        out.set_block(r0, 0, m);
        r0 += m.rows();
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) { return hstack({a, b}, a.rows(), a.modulus()); }
Matrix vstack(const Matrix& a, const Matrix& b) { return vstack({a, b}, a.cols(), a.modulus()); }

Matrix block_diagonal(const std::vector<Matrix>& blocks, std::uint32_t p) {
    std::size_t nr = 0;
    std::size_t nc = 0;
    for (const auto& b : blocks) {
        nr += b.rows();
        nc += b.cols();
    }
    Matrix out(nr, nc, p);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        out.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

namespace {

// Gauss elimination in place. `full` also clears entries above each pivot.
std::vector<std::size_t> eliminate(Matrix& a, bool full) {
    const PrimeField f(a.modulus());
    const std::uint32_t p = a.modulus();
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    // For small p a table of multiples replaces the 64-bit remainder.
    const bool small_field = p <= 1024;
    std::vector<Scalar> multiples(small_field ? p : 0);
    std::size_t prow = 0;
    for (std::size_t col = 0; col < nc && prow < nr; ++col) {
        std::size_t sel = nr;
        for (std::size_t r = prow; r < nr; ++r) {
            if (a(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == nr) continue;
        if (sel != prow) {
            auto r1 = a.row(sel);
            auto r2 = a.row(prow);
            std::swap_ranges(r1.begin(), r1.end(), r2.begin());
        }
        auto pr = a.row(prow);
        const Scalar piv_inv = f.inv(pr[col]);
        if (piv_inv != 1) {
            for (std::size_t c = col; c < nc; ++c) pr[c] = f.mul(pr[c], piv_inv);
        }
        // Rows here are mostly sparse, so only the pivot row's support is touched.
        support.clear();
        for (std::size_t c = col; c < nc; ++c) {
            if (pr[c] != 0) support.push_back(c);
        }
        for (std::size_t r = full ? 0 : prow + 1; r < nr; ++r) {
            if (r == prow) continue;
            auto rr = a.row(r);
            const Scalar factor = rr[col];
            if (factor == 0) continue;
            const std::uint64_t negf = p - factor;
            if (small_field) {
                for (Scalar x = 0; x < p; ++x) multiples[x] = static_cast<Scalar>(negf * x % p);
                for (std::size_t c : support) {
                    const Scalar v = rr[c] + multiples[pr[c]];
                    rr[c] = v >= p ? v - p : v;
                }
                continue;
            }
            for (std::size_t c : support) rr[c] = static_cast<Scalar>((rr[c] + negf * pr[c]) % p);
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

}  // namespace

Echelon row_reduce(Matrix a) {
    auto pivots = eliminate(a, true);
    return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
    Matrix work = a;
    return eliminate(work, false).size();
}

Matrix kernel_basis(const Matrix& a) {
    const Echelon e = row_reduce(a);
    const std::size_t n = a.cols();
    const PrimeField f(a.modulus());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix k(n, free_cols.size(), a.modulus());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t fc = free_cols[j];
        k(fc, j) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], j) = f.neg(e.reduced(i, fc));
    }
    return k;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "solve_linear");
    if (a.rows() != b.rows()) throw ContractViolation("solve_linear: rows(A) != rows(b)");
    const std::size_t n = a.cols();
    const Echelon e = row_reduce(hstack(a, b));
    // A pivot inside the right-hand block means an inconsistent row.
    for (std::size_t c : e.pivots) {
        if (c >= n) return std::nullopt;
    }
    Matrix x(n, b.cols(), a.modulus());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
    }
    return x;
}

std::vector<std::size_t> independent_columns(const Matrix& a) {
    Matrix work = a;
    return eliminate(work, false);
}

Matrix column_space(const Matrix& a) {
    const auto idx = independent_columns(a);
    return a.select_columns(idx);
}

Matrix left_inverse(const Matrix& k) {
    // Pivot columns of K^T pick rows of K forming an invertible square block.
    const Echelon e = row_reduce(k.transposed());
    if (e.rank() != k.cols()) throw ContractViolation("left_inverse: matrix lacks full column rank");
    const Matrix square = k.select_rows(e.pivots);
    const auto inv = inverse(square);
    Matrix l(k.cols(), k.rows(), k.modulus());
    for (std::size_t i = 0; i < k.cols(); ++i) {
        for (std::size_t j = 0; j < e.pivots.size(); ++j) l(i, e.pivots[j]) = (*inv)(i, j);
    }
    return l;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ContractViolation("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const Echelon e = row_reduce(hstack(a, Matrix::identity(n, a.modulus())));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

bool column_span_contains(const Matrix& a, const Matrix& b) {
    return rank(hstack(a, b)) == rank(a);
}

}  // namespace redhom
