#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/linalg/matrix.hpp"

namespace ybx {

/// Linear endomorphism of V^{⊗Legs}, dim V = n.
///
/// Basis tensor e_i ⊗ e_j has flat index i*n + j (and e_i⊗e_j⊗e_k has
/// i*n^2 + j*n + k). Column index = input, row index = output: the image of
/// basis tensor t is column t.
template <std::size_t Legs>
class TensorOperator {
 public:
  TensorOperator() = default;
  TensorOperator(std::size_t dim, Matrix matrix) : dim_(dim), matrix_(std::move(matrix)) {
    const std::size_t size = flat_size(dim);
    if (matrix_.rows() != size || matrix_.cols() != size) {
      throw ShapeError("operator matrix must be " + std::to_string(size) + "x" +
                       std::to_string(size));
    }
  }

  static std::size_t flat_size(std::size_t dim) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < Legs; ++i) size *= dim;
    return size;
  }
  static TensorOperator identity(std::size_t dim) {
    return TensorOperator(dim, Matrix::identity(flat_size(dim)));
  }
  static TensorOperator zero(std::size_t dim) {
    return TensorOperator(dim, Matrix(flat_size(dim), flat_size(dim)));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const ParamScalar& operator()(std::size_t out, std::size_t in) const { return matrix_(out, in); }

  bool is_zero() const { return matrix_.is_zero(); }
  TensorOperator evaluate(const Assignment& point) const {
    return TensorOperator(dim_, matrix_.evaluate(point));
  }
  TensorOperator substitute(const Substitution& values) const {
    return TensorOperator(dim_, matrix_.substitute(values));
  }

  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    check_same(a, b);
    return TensorOperator(a.dim_, a.matrix_ + b.matrix_);
  }
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    check_same(a, b);
    return TensorOperator(a.dim_, a.matrix_ - b.matrix_);
  }
  friend TensorOperator operator*(const ParamScalar& s, const TensorOperator& a) {
    return TensorOperator(a.dim_, a.matrix_ * s);
  }
  friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
    return a.dim_ == b.dim_ && a.matrix_ == b.matrix_;
  }
  friend bool operator!=(const TensorOperator& a, const TensorOperator& b) { return !(a == b); }

  static void check_same(const TensorOperator& a, const TensorOperator& b) {
    if (a.dim_ != b.dim_) {
      throw DimensionMismatch("operators act on spaces of dimension " + std::to_string(a.dim_) +
                              " and " + std::to_string(b.dim_));
    }
  }

 private:
  std::size_t dim_ = 0;
  Matrix matrix_;
};

using Operator2 = TensorOperator<2>;
using Operator3 = TensorOperator<3>;

/// a ∘ b (apply b first).
template <std::size_t Legs>
TensorOperator<Legs> compose(const TensorOperator<Legs>& a, const TensorOperator<Legs>& b) {
  TensorOperator<Legs>::check_same(a, b);
  return TensorOperator<Legs>(a.dim(), a.matrix() * b.matrix());
}

/// The flip v⊗w -> w⊗v.
Operator2 twist(std::size_t n);

enum class Legs { l12, l23, l13 };

const char* to_string(Legs legs);

/// R^{12} = R⊗I, R^{23} = I⊗R, R^{13} = (I⊗τ)(R⊗I)(I⊗τ).
Operator3 embed(const Operator2& r, Legs legs);

/// Exact inverse of an operator; not-invertible carries the determinant
/// (identically zero).
struct OperatorInversion {
  std::optional<Operator2> inverse;
  ParamScalar determinant;
  bool invertible() const noexcept { return inverse.has_value(); }
};

OperatorInversion inverse(const Operator2& r);

/// [R,S,T] = R^{12} S^{13} T^{23} - T^{23} S^{13} R^{12}
Operator3 yb_commutator(const Operator2& r, const Operator2& s, const Operator2& t);

/// R^{12}R^{23}R^{12} - R^{23}R^{12}R^{23}
Operator3 braid_defect(const Operator2& r);

/// R^{12}R^{13}R^{23} - R^{23}R^{13}R^{12}
Operator3 qybe_defect(const Operator2& r);

/// R^{12}(u,v) R^{13}(u,w) R^{23}(v,w) - R^{23}(v,w) R^{13}(u,w) R^{12}(u,v),
/// given the three specializations.
Operator3 colored_defect(const Operator2& ruv, const Operator2& ruw, const Operator2& rvw);

/// Aligned plain-text rendering, one row per line. With `labels`, a header
/// row and column of basis-tensor names are added.
std::string format_matrix(const Matrix& m, const std::vector<std::string>& labels = {});

/// Names of the basis tensors of V⊗V in flat-index order, e.g. "1⊗x".
std::vector<std::string> tensor_labels(const std::vector<std::string>& basis);

}  // namespace ybx
