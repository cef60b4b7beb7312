#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mocklie/field.hpp"

namespace mocklie {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
/// Standard basis vector e_index of length n.
Vector unit_vector(const Field& f, std::size_t n, std::size_t index);
bool is_zero(std::span<const Scalar> v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense row-major matrix of exact scalars sharing one field.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    /// Rows must have equal length `cols` (needed when `rows` is empty).
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix identity(const Field& f, std::size_t n);
    /// Convenience for tests and literals: integer entries.
    static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const;
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    /// Entries in row-major order; length rows * cols.
    const Vector& flat() const noexcept { return data_; }
    /// Inverse of flat(): reshape a length rows*cols vector.
    static Matrix from_flat(const Field& f, std::size_t rows, std::size_t cols, Vector entries);

    bool is_zero() const;

    /// Matrix-vector product (*this) v.
    Vector apply(std::span<const Scalar> v) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    Vector data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& s, const Matrix& m);
Matrix transpose(const Matrix& m);
/// Throws ShapeError if m is singular or not square.
Matrix inverse(const Matrix& m);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. The pivot for each column is the first
/// remaining row with a nonzero entry there.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}. One vector per free column f, in increasing
/// column order, with a 1 at f and 0 at every other free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Nonzero rows of rref(basis): the canonical basis of a row space.
Matrix canonical_basis(const Matrix& basis);

/// Both arguments are bases stacked as rows; equal iff the row spaces agree.
bool subspace_equal(const Matrix& a, const Matrix& b);
bool span_contains(const Matrix& basis, std::span<const Scalar> v);

std::string to_string(const Matrix& m);

}  // namespace mocklie
