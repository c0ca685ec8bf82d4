#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfca/field.hpp"

namespace hopfca {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
/// Kronecker product, first factor major.
Vec kron(const Vec& a, const Vec& b);
/// Lexicographic comparison through Scalar::cmp.
bool vec_less(const Vec& a, const Vec& b);

/// Dense row-major matrix over a fixed field. Rows or columns may be zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_cols(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix transpose() const;
    Matrix kron_with(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Stack rows of o below this matrix.
    Matrix vstack(const Matrix& o) const;

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix reduced;                 // zero rows removed
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

/// Row-reduced basis of a linear subspace. Canonical: pivot entries 1,
/// pivot columns zero elsewhere, strictly increasing pivots.
struct Subspace {
    std::size_t ambient = 0;
    Matrix basis; // rows = basis vectors, in rref
    std::vector<std::size_t> pivots;

    static Subspace from_spanning(const FieldSpec& f, std::size_t ambient,
                                  const std::vector<Vec>& vectors);
    static Subspace full(const FieldSpec& f, std::size_t ambient);
    static Subspace zero(const FieldSpec& f, std::size_t ambient);

    std::size_t dim() const { return basis.rows(); }
    const FieldSpec& field() const { return basis.field(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

    /// Coordinates of v in this basis (pivot-column reads), if v is a member.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
};

/// Null space of m, as a Subspace of dimension cols - rank.
Subspace kernel_basis(const Matrix& m);
/// Column space of m as a Subspace of the codomain.
Subspace image_basis(const Matrix& m);

/// Some x with m x = b, free variables set to 0; nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Columnwise solve: X with m X = B; nullopt when any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);

/// Is m invertible (square, full rank)?
bool invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

struct QuotientMaps {
    Matrix projection; // (ambient - dim s) x ambient, kernel exactly s
    Matrix section;    // right inverse of projection
};

/// Projection onto the quotient by s, with basis the non-pivot coordinates of s.
QuotientMaps quotient_with_section(const Subspace& s);

/// Small integer matrix (incidence data, functor inputs).
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> e;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, 0) {}
    static IntMat identity(std::size_t n);

    long long& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    long long at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    bool is_zero() const;
    bool operator==(const IntMat& o) const = default;

    /// Reduce entries into a field matrix.
    Matrix over(const FieldSpec& f) const;
};

} // namespace hopfca
