#pragma once

#include "ybx/algebra/algebra.hpp"
#include "ybx/tensor/operator.hpp"

namespace ybx::detail {

/// Accumulates the columns of an operator on V⊗V one basis tensor at a time.
class OperatorBuilder {
 public:
  explicit OperatorBuilder(std::size_t dim) : dim_(dim), matrix_(dim * dim, dim * dim) {}

  std::size_t flat(std::size_t i, std::size_t j) const { return i * dim_ + j; }

  /// column[input] += coef * (x ⊗ y)
  void add(std::size_t input, const ParamScalar& coef, const Coordinates& x, const Coordinates& y) {
    if (coef.is_zero()) return;
    for (std::size_t a = 0; a < dim_; ++a) {
      if (x[a].is_zero()) continue;
      const ParamScalar xa = coef * x[a];
      for (std::size_t b = 0; b < dim_; ++b) {
        if (!y[b].is_zero()) matrix_(flat(a, b), input) += xa * y[b];
      }
    }
  }

  /// column[input] += coef * (e_a ⊗ e_b)
  void add_basis(std::size_t input, const ParamScalar& coef, std::size_t a, std::size_t b) {
    matrix_(flat(a, b), input) += coef;
  }

  Operator2 finish() && { return Operator2(dim_, std::move(matrix_)); }

 private:
  std::size_t dim_;
  Matrix matrix_;
};

}  // namespace ybx::detail
