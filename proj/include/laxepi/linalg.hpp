#pragma once
// Exact dense linear algebra over the rationals.
//
// Conventions: vectors are columns; a Matrix with r rows and c columns is a
// linear map k^c -> k^r. Every routine accepts zero-sized operands.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace laxepi {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into canonical form. Throws Error(Parse).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix column(const Vector& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    Vector col(std::size_t j) const;
    const std::vector<Rational>& entries() const noexcept { return data_; }

    Matrix transpose() const;
    bool is_zero() const;

    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const Matrix& block);
    Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& s);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);

/// [a | b], rows must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b], columns must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix kronecker(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_iso(const Matrix& a);

/// One exact solution of a x = b with free variables set to zero, or
/// nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Simultaneous solve a X = B, column by column.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of an invertible square matrix.
Matrix inverse(const Matrix& a);

/// A linear subspace of k^n, stored by its reduced row-echelon basis so that
/// equal subspaces have equal representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim);  // zero subspace

    /// Span of the rows of `generators`.
    static Subspace span_rows(const Matrix& generators);
    /// Span of a list of vectors in k^n.
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    /// Rows form the canonical basis.
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector basis_vector(std::size_t i) const;
    /// Basis vectors as the columns of an ambient_dim x dim matrix.
    Matrix basis_columns() const;

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the canonical basis. v must lie in the subspace.
    Vector coordinates(std::span<const Rational> v) const;

    /// Map k^n -> k^n / S, with the quotient identified with the
    /// coordinates at the non-pivot columns.
    Matrix quotient_map() const;
    /// Right inverse of quotient_map(): the standard complement.
    Matrix quotient_section() const;
    /// Non-pivot coordinate indices, in increasing order.
    std::vector<std::size_t> complement_indices() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : a v = 0}.
Subspace kernel_basis(const Matrix& a);
/// Column space of a, inside k^{a.rows()}.
Subspace image_basis(const Matrix& a);
Subspace sum(const Subspace& s1, const Subspace& s2);
Subspace intersect(const Subspace& s1, const Subspace& s2);
/// a(S), inside k^{a.rows()}.
Subspace image_of(const Matrix& a, const Subspace& s);
/// {v : a v in S}.
Subspace preimage(const Matrix& a, const Subspace& s);

std::string to_string(const Matrix& m);

}  // namespace laxepi
