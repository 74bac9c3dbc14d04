#pragma once

#include "nilhodge/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilhodge {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector conj(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
std::string to_string(const Vector& v);

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  /// Submatrix on the given row and column index lists (in the given order).
  Matrix select(std::span<const std::size_t> row_idx,
                std::span<const std::size_t> col_idx) const;

  Matrix transpose() const;
  /// Entrywise complex conjugate.
  Matrix conj() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend Matrix operator*(const Scalar& s, Matrix m);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; `pivots[r]` is the pivot column of row r.
/// Rows below pivots.size() are zero.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with the first nonzero entry of each column as
/// pivot; the result is the unique RREF, so it is canonical.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Null-space basis read off the RREF: one vector per free column f, with a 1
/// in position f and zeros in every other free column. Size is
/// cols - rank and the output depends only on the matrix.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Canonical basis (nonzero RREF rows) of the span of `vectors`.
std::vector<Vector> span_basis(std::span<const Vector> vectors, std::size_t dim);

/// True iff v lies in the span of `basis`. All vectors must have equal length.
bool in_span(const Vector& v, std::span<const Vector> basis);

/// Some x with m * x == b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally grown span. Each stored row is normalised at its pivot and
/// reduced against the earlier rows, so membership is a single sweep.
class SpanBuilder {
public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  bool contains(const Vector& v) const;
  /// Adds v; returns false (and leaves the span unchanged) if v was already in it.
  bool add(const Vector& v);

private:
  Vector reduce(Vector v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace nilhodge
