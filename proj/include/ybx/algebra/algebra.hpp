#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ybx/scalars/param_scalar.hpp"

namespace ybx {

/// c[i][j] is the coordinate vector of e_i * e_j.
using StructureTable = std::vector<std::vector<std::vector<ParamScalar>>>;
using Coordinates = std::vector<ParamScalar>;

/// Finite-dimensional unital associative algebra given by structure
/// constants. Instances are validated on construction and immutable.
class Algebra {
 public:
  /// Validates shapes, the unit law and associativity (in that order).
  /// Throws ShapeError or AxiomViolation with the first failing indices.
  static Algebra make(std::size_t dim, StructureTable structure, Coordinates unit,
                      std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const StructureTable& structure() const noexcept { return structure_; }
  const Coordinates& product_of_basis(std::size_t i, std::size_t j) const {
    return structure_[i][j];
  }
  const Coordinates& unit() const noexcept { return unit_; }
  /// Display names; defaults to e0, e1, ...
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Coordinates multiply(std::span<const ParamScalar> a, std::span<const ParamScalar> b) const;
  Coordinates basis_vector(std::size_t i) const;

  std::set<std::string> indeterminates() const;
  /// Same algebra with indeterminates in the structure constants replaced.
  /// The result is re-validated.
  Algebra substitute(const Substitution& values) const;

 private:
  Algebra() = default;

  std::size_t dim_ = 0;
  StructureTable structure_;
  Coordinates unit_;
  std::vector<std::string> labels_;
};

Algebra make_algebra(std::size_t dim, StructureTable structure, Coordinates unit,
                     std::vector<std::string> labels = {});

/// Bilinear product of coordinate vectors. Throws DimensionMismatch.
Coordinates mul_elements(const Algebra& algebra, std::span<const ParamScalar> a,
                         std::span<const ParamScalar> b);

/// k[X]/(X^2 - mX - n) in the basis {1, x}.
Algebra quadratic_quotient_algebra(const ParamScalar& m, const ParamScalar& n);

}  // namespace ybx
