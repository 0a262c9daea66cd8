#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ybx/algebra/algebra.hpp"
#include "ybx/linalg/matrix.hpp"

namespace ybx {

/// Z2-graded Lie superalgebra with a homogeneous basis.
///
/// b[i][j] is the coordinate vector of [e_i, e_j]. Validation checks, in
/// order: grading compatibility, super antisymmetry
/// [x,y] = -(-1)^{|x||y|}[y,x], and the super Jacobi identity
/// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
class LieSuperalgebra {
 public:
  static LieSuperalgebra make(std::size_t dim, std::vector<int> degree, StructureTable bracket,
                              std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<int>& degrees() const noexcept { return degree_; }
  int degree(std::size_t i) const { return degree_.at(i); }
  const StructureTable& bracket_table() const noexcept { return bracket_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Bilinear extension of the bracket table.
  Coordinates bracket(std::span<const ParamScalar> x, std::span<const ParamScalar> y) const;
  Coordinates basis_vector(std::size_t i) const;

  /// (-1)^{|e_i||e_j|}
  int sign(std::size_t i, std::size_t j) const { return degree_[i] * degree_[j] == 1 ? -1 : 1; }

  bool is_even(std::span<const ParamScalar> x) const;
  bool is_central(std::span<const ParamScalar> x) const;

 private:
  LieSuperalgebra() = default;

  std::size_t dim_ = 0;
  std::vector<int> degree_;
  StructureTable bracket_;
  std::vector<std::string> labels_;
};

LieSuperalgebra make_superalgebra(std::size_t dim, std::vector<int> degree, StructureTable bracket,
                                  std::vector<std::string> labels = {});

Coordinates bracket_elements(const LieSuperalgebra& L, std::span<const ParamScalar> x,
                             std::span<const ParamScalar> y);

/// Basis of the even part of the center, from the exact nullspace of the
/// stacked maps z -> [z, e_j] restricted to even z.
std::vector<Coordinates> even_center(const LieSuperalgebra& L);

/// gl(1|1) in the basis E11, E22 (even), E12, E21 (odd) with the
/// super-commutator bracket.
LieSuperalgebra general_linear_1_1();

/// Abelian superalgebra with the given degrees.
LieSuperalgebra abelian_superalgebra(std::vector<int> degree);

}  // namespace ybx
