#include "ybx/algebra/algebra.hpp"

#include "ybx/errors.hpp"

namespace ybx {

namespace {

Coordinates multiply_raw(const StructureTable& c, std::span<const ParamScalar> a,
                         std::span<const ParamScalar> b) {
  const std::size_t n = a.size();
  Coordinates out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const ParamScalar coef = a[i] * b[j];
      const auto& prod = c[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!prod[k].is_zero()) out[k] += coef * prod[k];
      }
    }
  }
  return out;
}

std::string describe_vector(const Coordinates& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace

Algebra Algebra::make(std::size_t dim, StructureTable structure, Coordinates unit,
                      std::vector<std::string> labels) {
  if (dim == 0) throw ShapeError("algebra dimension must be positive");
  if (structure.size() != dim) throw ShapeError("structure table has wrong outer size");
  for (const auto& row : structure) {
    if (row.size() != dim) throw ShapeError("structure table has wrong row size");
    for (const auto& v : row) {
      if (v.size() != dim) throw ShapeError("structure constant vector has wrong length");
    }
  }
  if (unit.size() != dim) throw ShapeError("unit vector has wrong length");
  if (!labels.empty() && labels.size() != dim) throw ShapeError("label count differs from dimension");
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }

  Algebra a;
  a.dim_ = dim;
  a.structure_ = std::move(structure);
  a.unit_ = std::move(unit);
  a.labels_ = std::move(labels);

  for (std::size_t i = 0; i < dim; ++i) {
    const Coordinates e = a.basis_vector(i);
    const Coordinates left = multiply_raw(a.structure_, a.unit_, e);
    const Coordinates right = multiply_raw(a.structure_, e, a.unit_);
    if (left != e) throw AxiomViolation(Axiom::unit, {i}, "1*e = " + describe_vector(left));
    if (right != e) throw AxiomViolation(Axiom::unit, {i}, "e*1 = " + describe_vector(right));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Coordinates& ij = a.structure_[i][j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Coordinates lhs = multiply_raw(a.structure_, ij, a.basis_vector(k));
        const Coordinates rhs =
            multiply_raw(a.structure_, a.basis_vector(i), a.structure_[j][k]);
        if (lhs != rhs) {
          throw AxiomViolation(Axiom::associativity, {i, j, k},
                               describe_vector(lhs) + " != " + describe_vector(rhs));
        }
      }
    }
  }
  return a;
}

Coordinates Algebra::multiply(std::span<const ParamScalar> a, std::span<const ParamScalar> b) const {
  if (a.size() != dim_ || b.size() != dim_) {
    throw DimensionMismatch("element length differs from algebra dimension");
  }
  return multiply_raw(structure_, a, b);
}

Coordinates Algebra::basis_vector(std::size_t i) const {
  Coordinates e(dim_);
  e.at(i) = 1;
  return e;
}

std::set<std::string> Algebra::indeterminates() const {
  std::set<std::string> out;
  auto add = [&](const ParamScalar& s) {
    if (s.is_constant()) return;
    auto names = s.indeterminates();
    out.insert(names.begin(), names.end());
  };
  for (const auto& row : structure_) {
    for (const auto& v : row) {
      for (const auto& s : v) add(s);
    }
  }
  for (const auto& s : unit_) add(s);
  return out;
}

Algebra Algebra::substitute(const Substitution& values) const {
  StructureTable table = structure_;
  for (auto& row : table) {
    for (auto& v : row) {
      for (auto& s : v) s = s.substitute(values);
    }
  }
  Coordinates unit = unit_;
  for (auto& s : unit) s = s.substitute(values);
  return make(dim_, std::move(table), std::move(unit), labels_);
}

Algebra make_algebra(std::size_t dim, StructureTable structure, Coordinates unit,
                     std::vector<std::string> labels) {
  return Algebra::make(dim, std::move(structure), std::move(unit), std::move(labels));
}

Coordinates mul_elements(const Algebra& algebra, std::span<const ParamScalar> a,
                         std::span<const ParamScalar> b) {
  return algebra.multiply(a, b);
}

Algebra quadratic_quotient_algebra(const ParamScalar& m, const ParamScalar& n) {
  StructureTable c(2, std::vector<Coordinates>(2, Coordinates(2)));
  c[0][0] = {1, 0};
  c[0][1] = {0, 1};
  c[1][0] = {0, 1};
  c[1][1] = {n, m};
  return Algebra::make(2, std::move(c), {1, 0}, {"1", "x"});
}

}  // namespace ybx
