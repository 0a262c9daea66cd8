#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ybx/scalars/param_scalar.hpp"

namespace ybx {

using Vector = std::vector<ParamScalar>;

/// Dense row-major matrix over ParamScalar. Products skip zero entries, so
/// the sparse operators that dominate this library multiply cheaply.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// Row-major nested initializer, mostly for tests and fixtures.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ParamScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ParamScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  /// First nonzero entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  std::set<std::string> indeterminates() const;

  Matrix transpose() const;
  Matrix evaluate(const Assignment& point) const;
  Matrix substitute(const Substitution& values) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const ParamScalar& scale);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const ParamScalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ParamScalar> data_;
};

/// Outcome of an exact inversion. When the determinant is identically zero
/// `inverse` is empty.
struct Inversion {
  std::optional<Matrix> inverse;
  ParamScalar determinant;
  bool invertible() const noexcept { return inverse.has_value(); }
};

/// Determinant via fraction-free Gauss-Jordan elimination.
ParamScalar determinant(const Matrix& m);

/// Exact inverse over the rational-function field.
Inversion invert(const Matrix& m);

/// Basis of the right nullspace {x : m x = 0}; each basis vector has a 1 in
/// its free coordinate (reduced echelon convention).
std::vector<Vector> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace ybx
