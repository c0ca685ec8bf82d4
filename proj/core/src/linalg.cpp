#include "hopfca/linalg.hpp"

#include <algorithm>

namespace hopfca {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty()) {
        if (a.size() != b.size()) throw InputError("vector length mismatch");
    }
    if (a.empty()) throw InputError("dot of empty vectors needs a field");
    Scalar s = Scalar::zero(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
    return r;
}

bool vec_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = a[i].cmp(b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_cols(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw InputError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::kron_with(const Matrix& o) const {
    Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_ || !(field_ == o.field_)) throw InputError("vstack mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = prow; r < rows; ++r)
            if (!a.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        if (sel != prow)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(sel, c), a.at(prow, c));
        Scalar inv = a.at(prow, col).inverse();
        for (std::size_t c = col; c < cols; ++c) a.at(prow, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow) continue;
            Scalar f = a.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t c = col; c < cols; ++c) a.at(r, c) -= f * a.at(prow, c);
        }
        pivots.push_back(col);
        ++prow;
    }
    Matrix out(a.field(), pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    return {out, pivots};
}

Subspace Subspace::from_spanning(const FieldSpec& f, std::size_t ambient,
                                 const std::vector<Vec>& vectors) {
    Matrix m = Matrix::from_rows(f, ambient, vectors);
    RrefResult r = rref(m);
    Subspace s;
    s.ambient = ambient;
    s.basis = r.reduced;
    s.pivots = r.pivots;
    return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(f, ambient);
    s.pivots.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots[i] = i;
    return s;
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(f, 0, ambient);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient) throw InputError("ambient mismatch");
    Vec w = v;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        Scalar c = w[pivots[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient; ++j) w[j] -= c * basis.at(r, j);
    }
    return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient != ambient) throw InputError("ambient mismatch");
    for (std::size_t r = 0; r < o.basis.rows(); ++r)
        if (!contains(o.basis.row(r))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient) throw InputError("ambient mismatch");
    Vec coeff;
    coeff.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) coeff.push_back(v[pivots[r]]);
    // verify reconstruction
    Vec w = v;
    for (std::size_t r = 0; r < dim(); ++r)
        if (!coeff[r].is_zero())
            for (std::size_t j = 0; j < ambient; ++j) w[j] -= coeff[r] * basis.at(r, j);
    if (!is_zero_vec(w)) return std::nullopt;
    return coeff;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient != ambient || !(field() == o.field())) throw InputError("ambient mismatch");
    RrefResult r = rref(basis.vstack(o.basis));
    Subspace s;
    s.ambient = ambient;
    s.basis = r.reduced;
    s.pivots = r.pivots;
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient != ambient || !(field() == o.field())) throw InputError("ambient mismatch");
    // x = a^T basis = b^T o.basis; kernel of [basis^T | -o.basis^T]
    const FieldSpec& f = field();
    Matrix lhs(f, ambient, dim() + o.dim());
    for (std::size_t j = 0; j < ambient; ++j) {
        for (std::size_t r = 0; r < dim(); ++r) lhs.at(j, r) = basis.at(r, j);
        for (std::size_t r = 0; r < o.dim(); ++r) lhs.at(j, dim() + r) = -o.basis.at(r, j);
    }
    Subspace ker = kernel_basis(lhs);
    std::vector<Vec> vecs;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vec x = zero_vec(f, ambient);
        for (std::size_t a = 0; a < dim(); ++a) {
            Scalar c = ker.basis.at(r, a);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient; ++j) x[j] += c * basis.at(a, j);
        }
        vecs.push_back(std::move(x));
    }
    return from_spanning(f, ambient, vecs);
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (is_pivot[fcol]) continue;
        Vec x = zero_vec(m.field(), cols);
        x[fcol] = Scalar::one(m.field());
        for (std::size_t row = 0; row < r.pivots.size(); ++row)
            x[r.pivots[row]] = -r.reduced.at(row, fcol);
        vecs.push_back(std::move(x));
    }
    return Subspace::from_spanning(m.field(), cols, vecs);
}

Subspace image_basis(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
    return Subspace::from_spanning(m.field(), m.rows(), cols);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (auto p : r.pivots)
        if (p == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t row = 0; row < r.pivots.size(); ++row)
        x[r.pivots[row]] = r.reduced.at(row, m.cols());
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw InputError("solve: rhs shape mismatch");
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        auto xc = solve(m, b.col(c));
        if (!xc) return std::nullopt;
        for (std::size_t r = 0; r < m.cols(); ++r) x.at(r, c) = (*xc)[r];
    }
    return x;
}

bool invertible(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    return rref(m).pivots.size() == m.rows();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw MathError("inverse of non-square matrix");
    auto x = solve_matrix(m, Matrix::identity(m.field(), m.rows()));
    if (!x) throw MathError("matrix is singular");
    return *x;
}

QuotientMaps quotient_with_section(const Subspace& s) {
    const FieldSpec& f = s.field();
    const std::size_t n = s.ambient;
    std::vector<bool> is_pivot(n, false);
    for (auto p : s.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const std::size_t m = free_cols.size();
    Matrix proj(f, m, n), section(f, n, m);
    for (std::size_t idx = 0; idx < m; ++idx) {
        proj.at(idx, free_cols[idx]) = Scalar::one(f);
        section.at(free_cols[idx], idx) = Scalar::one(f);
        for (std::size_t r = 0; r < s.dim(); ++r)
            proj.at(idx, s.pivots[r]) = -s.basis.at(r, free_cols[idx]);
    }
    return {proj, section};
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw InputError("integer matrix product shape mismatch");
    IntMat r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            long long a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows != o.rows || cols != o.cols) throw InputError("integer matrix sum shape mismatch");
    IntMat r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

bool IntMat::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
}

Matrix IntMat::over(const FieldSpec& f) const {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of(f, at(i, j));
    return m;
}

} // namespace hopfca
