#include "ybx/linalg/matrix.hpp"

#include "ybx/errors.hpp"

namespace ybx {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero() const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) return std::make_pair(i / cols_, i % cols_);
  }
  return std::nullopt;
}

std::set<std::string> Matrix::indeterminates() const {
  std::set<std::string> out;
  for (const auto& x : data_) {
    if (x.is_constant()) continue;
    auto names = x.indeterminates();
    out.insert(names.begin(), names.end());
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::evaluate(const Assignment& point) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) out.data_[i] = data_[i].evaluate(point);
  }
  return out;
}

Matrix Matrix::substitute(const Substitution& values) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_constant()) {
      out.data_[i] = data_[i].substitute(values);
    } else {
      out.data_[i] = data_[i];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("matrix difference shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const ParamScalar& scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  // Column indices of the nonzeros in each row of b.
  std::vector<std::vector<std::size_t>> support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (!b(k, j).is_zero()) support[k].push_back(j);
    }
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ParamScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      if (aik.is_one()) {
        for (auto j : support[k]) out(i, j) += b(k, j);
      } else {
        for (auto j : support[k]) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

}  // namespace ybx
