#include "laxepi/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "laxepi/error.hpp"

namespace laxepi {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { fail(ErrorCode::Parse, "malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
        return !part.empty() && std::all_of(part.begin(), part.end(),
                                            [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view sv(s);
    if (slash == std::string::npos) {
        if (!digits_ok(sv, true)) bad();
    } else {
        if (!digits_ok(sv.substr(0, slash), true) || !digits_ok(sv.substr(slash + 1), false)) bad();
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) bad();
    if (q.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "matrix entry count");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "ragged matrix columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column(const Vector& v) { return from_columns({v}, v.size()); }

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const { return laxepi::is_zero(data_); }

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
    if (r + block.rows() > rows_ || c + block.cols() > cols_)
        fail(ErrorCode::DimensionMismatch, "set_block out of range");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    if (r + nr > rows_ || c + nc > cols_) fail(ErrorCode::DimensionMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix b(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[i], j);
    return b;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::DimensionMismatch, "matrix +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::DimensionMismatch, "matrix -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& q : data_) q *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows(), b.cols());
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) == 0) continue;
                t = aik * b(k, j);
                c(i, j) += t;
            }
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(v[j]) != 0 && sgn(a(i, j)) != 0) r[i] += a(i, j) * v[j];
    return r;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "hstack");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "vstack");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

namespace {

// Gauss-Jordan elimination in place. Returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Rational factor, t;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        if (m(r, c) != 1) {
            Rational inv = 1 / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (sgn(m(r, j)) == 0) continue;
                t = factor * m(r, j);
                m(i, j) -= t;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rref rref(const Matrix& m) {
    Rref out{m, {}};
    out.pivots = eliminate(out.reduced);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

bool is_iso(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve: a.rows != b.rows");
    Matrix aug = hstack(a, b);
    auto pivots = eliminate(aug);
    const std::size_t n = a.cols();
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= n) return std::nullopt;  // pivot in the right-hand side
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, n + j);
    }
    return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    auto x = solve(a, Matrix::column(b));
    if (!x) return std::nullopt;
    return x->col(0);
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x || a * *x != Matrix::identity(a.rows()))
        fail(ErrorCode::InvalidArgument, "inverse of singular matrix");
    return *x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span_rows(const Matrix& generators) {
    Subspace s(generators.cols());
    Rref r = rref(generators);
    s.pivots_ = r.pivots;
    s.basis_ = r.reduced.block(0, 0, r.rank(), generators.cols());
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return span_rows(Matrix::from_columns(vectors, ambient_dim).transpose());
}

Subspace Subspace::full(std::size_t ambient_dim) { return span_rows(Matrix::identity(ambient_dim)); }

Vector Subspace::basis_vector(std::size_t i) const {
    auto r = basis_.row(i);
    return Vector(r.begin(), r.end());
}

Matrix Subspace::basis_columns() const { return basis_.transpose(); }

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "subspace membership");
    // v - sum_i v[p_i] b_i must vanish.
    Vector residual(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational c = v[pivots_[i]];
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(basis_(i, j)) != 0) residual[j] -= c * basis_(i, j);
    }
    return laxepi::is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) fail(ErrorCode::DimensionMismatch, "subspace inclusion");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
    if (!contains(v)) fail(ErrorCode::InvalidArgument, "vector not in subspace");
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (p < pivots_.size() && pivots_[p] == j) {
            ++p;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

Matrix Subspace::quotient_map() const {
    auto comp = complement_indices();
    Matrix q(comp.size(), ambient_);
    // q(v)_j = v[j] - sum_i v[p_i] b_i[j] for non-pivot j.
    for (std::size_t r = 0; r < comp.size(); ++r) {
        std::size_t j = comp[r];
        q(r, j) = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (sgn(basis_(i, j)) != 0) q(r, pivots_[i]) -= basis_(i, j);
    }
    return q;
}

Matrix Subspace::quotient_section() const {
    auto comp = complement_indices();
    Matrix s(ambient_, comp.size());
    for (std::size_t r = 0; r < comp.size(); ++r) s(comp[r], r) = 1;
    return s;
}

Subspace kernel_basis(const Matrix& a) {
    Rref r = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, n);
}

Subspace image_basis(const Matrix& a) { return Subspace::span_rows(a.transpose()); }

Subspace sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) fail(ErrorCode::DimensionMismatch, "subspace sum");
    return Subspace::span_rows(vstack(s1.basis(), s2.basis()));
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        fail(ErrorCode::DimensionMismatch, "subspace intersection");
    // x B1 = y B2  <=>  (x, -y) in ker [B1; B2]^T.
    const std::size_t d1 = s1.dim();
    Matrix stacked = vstack(s1.basis(), s2.basis()).transpose();
    Subspace k = kernel_basis(stacked);
    std::vector<Vector> vecs;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        Vector v(s1.ambient_dim());
        for (std::size_t r = 0; r < d1; ++r) {
            const Rational& c = k.basis()(i, r);
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * s1.basis()(r, j);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, s1.ambient_dim());
}

Subspace image_of(const Matrix& a, const Subspace& s) {
    if (a.cols() != s.ambient_dim()) fail(ErrorCode::DimensionMismatch, "image_of");
    return image_basis(a * s.basis_columns());
}

Subspace preimage(const Matrix& a, const Subspace& s) {
    if (a.rows() != s.ambient_dim()) fail(ErrorCode::DimensionMismatch, "preimage");
    return kernel_basis(s.quotient_map() * a);
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace laxepi
