#include "ybx/lie_super/superalgebra.hpp"

#include "ybx/errors.hpp"

namespace ybx {

namespace {

Coordinates bracket_raw(const StructureTable& b, std::span<const ParamScalar> x,
                        std::span<const ParamScalar> y) {
  const std::size_t n = x.size();
  Coordinates out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const ParamScalar coef = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!b[i][j][k].is_zero()) out[k] += coef * b[i][j][k];
      }
    }
  }
  return out;
}

Coordinates axpy(const Coordinates& acc, int s, const Coordinates& v) {
  Coordinates out = acc;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (s > 0) {
      out[k] += v[k];
    } else {
      out[k] -= v[k];
    }
  }
  return out;
}

bool all_zero(const Coordinates& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

LieSuperalgebra LieSuperalgebra::make(std::size_t dim, std::vector<int> degree,
                                      StructureTable bracket, std::vector<std::string> labels) {
  if (dim == 0) throw ShapeError("superalgebra dimension must be positive");
  if (degree.size() != dim) throw ShapeError("degree list length differs from dimension");
  for (int d : degree) {
    if (d != 0 && d != 1) throw ShapeError("degrees must be 0 or 1");
  }
  if (bracket.size() != dim) throw ShapeError("bracket table has wrong outer size");
  for (const auto& row : bracket) {
    if (row.size() != dim) throw ShapeError("bracket table has wrong row size");
    for (const auto& v : row) {
      if (v.size() != dim) throw ShapeError("bracket vector has wrong length");
    }
  }
  if (!labels.empty() && labels.size() != dim) throw ShapeError("label count differs from dimension");
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }

  LieSuperalgebra L;
  L.dim_ = dim;
  L.degree_ = std::move(degree);
  L.bracket_ = std::move(bracket);
  L.labels_ = std::move(labels);
  const auto& b = L.bracket_;
  const auto& deg = L.degree_;

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (!b[i][j][k].is_zero() && deg[k] != (deg[i] + deg[j]) % 2) {
          throw AxiomViolation(Axiom::grading, {i, j, k},
                               "odd/even mismatch with coefficient " + b[i][j][k].to_string());
        }
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const int s = L.sign(i, j);
      for (std::size_t k = 0; k < dim; ++k) {
        // [e_i,e_j] + (-1)^{|i||j|}[e_j,e_i] = 0
        const ParamScalar sum = s > 0 ? b[i][j][k] + b[j][i][k] : b[i][j][k] - b[j][i][k];
        if (!sum.is_zero()) {
          throw AxiomViolation(Axiom::antisymmetry, {i, j},
                               "component " + std::to_string(k) + " leaves " + sum.to_string());
        }
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Coordinates ei = L.basis_vector(i), ej = L.basis_vector(j), ek = L.basis_vector(k);
        Coordinates total(dim);
        total = axpy(total, L.sign(i, k), bracket_raw(b, ei, b[j][k]));
        total = axpy(total, L.sign(j, i), bracket_raw(b, ej, b[k][i]));
        total = axpy(total, L.sign(k, j), bracket_raw(b, ek, b[i][j]));
        if (!all_zero(total)) throw AxiomViolation(Axiom::jacobi, {i, j, k}, "");
      }
    }
  }
  return L;
}

Coordinates LieSuperalgebra::bracket(std::span<const ParamScalar> x,
                                     std::span<const ParamScalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DimensionMismatch("element length differs from superalgebra dimension");
  }
  return bracket_raw(bracket_, x, y);
}

Coordinates LieSuperalgebra::basis_vector(std::size_t i) const {
  Coordinates e(dim_);
  e.at(i) = 1;
  return e;
}

bool LieSuperalgebra::is_even(std::span<const ParamScalar> x) const {
  if (x.size() != dim_) throw DimensionMismatch("element length differs from superalgebra dimension");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (degree_[i] == 1 && !x[i].is_zero()) return false;
  }
  return true;
}

bool LieSuperalgebra::is_central(std::span<const ParamScalar> x) const {
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!all_zero(bracket(x, basis_vector(j)))) return false;
  }
  return true;
}

LieSuperalgebra make_superalgebra(std::size_t dim, std::vector<int> degree, StructureTable bracket,
                                  std::vector<std::string> labels) {
  return LieSuperalgebra::make(dim, std::move(degree), std::move(bracket), std::move(labels));
}

Coordinates bracket_elements(const LieSuperalgebra& L, std::span<const ParamScalar> x,
                             std::span<const ParamScalar> y) {
  return L.bracket(x, y);
}

std::vector<Coordinates> even_center(const LieSuperalgebra& L) {
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (L.degree(i) == 0) even.push_back(i);
  }
  if (even.empty()) return {};
  const std::size_t n = L.dim();
  // Row (j, k): coefficient of e_k in [z, e_j]; column: even coordinate of z.
  Matrix adjoint(n * n, even.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t c = 0; c < even.size(); ++c) {
        adjoint(j * n + k, c) = L.bracket_table()[even[c]][j][k];
      }
    }
  }
  std::vector<Coordinates> out;
  for (const auto& v : nullspace(adjoint)) {
    Coordinates z(n);
    for (std::size_t c = 0; c < even.size(); ++c) z[even[c]] = v[c];
    out.push_back(std::move(z));
  }
  return out;
}

LieSuperalgebra general_linear_1_1() {
  // Matrix units E_ab with |E_ab| = |a| + |b|, index order E11, E22, E12, E21.
  const std::size_t row[4] = {0, 1, 0, 1};
  const std::size_t col[4] = {0, 1, 1, 0};
  const std::vector<int> degree = {0, 0, 1, 1};
  auto index_of = [&](std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (row[i] == r && col[i] == c) return i;
    }
    return std::size_t{4};
  };
  StructureTable b(4, std::vector<Coordinates>(4, Coordinates(4)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // [E_i, E_j] = E_i E_j - (-1)^{|i||j|} E_j E_i
      const int s = degree[i] * degree[j] == 1 ? -1 : 1;
      if (col[i] == row[j]) b[i][j][index_of(row[i], col[j])] += 1;
      if (col[j] == row[i]) b[i][j][index_of(row[j], col[i])] -= s;
    }
  }
  return LieSuperalgebra::make(4, degree, std::move(b), {"E11", "E22", "E12", "E21"});
}

LieSuperalgebra abelian_superalgebra(std::vector<int> degree) {
  const std::size_t n = degree.size();
  StructureTable b(n, std::vector<Coordinates>(n, Coordinates(n)));
  return LieSuperalgebra::make(n, std::move(degree), std::move(b));
}

}  // namespace ybx
