#include <algorithm>

#include "ybx/errors.hpp"
#include "ybx/linalg/matrix.hpp"

namespace ybx {

namespace {

struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> data;

  PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Polynomial& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return (exact_divide(a, gcd(a, b)) * b).monic();
}

// Multiplies every row of m by the lcm of its denominators. `scale[i]`
// receives the multiplier of row i. `extra_cols` zero columns are appended.
PolyMatrix clear_denominators(const Matrix& m, std::vector<Polynomial>& scale,
                              std::size_t extra_cols = 0) {
  PolyMatrix out(m.rows(), m.cols() + extra_cols);
  scale.assign(m.rows(), Polynomial(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_polynomial()) l = lcm(l, m(r, c).denominator());
    }
    scale[r] = l;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const ParamScalar& x = m(r, c);
      if (x.is_zero()) continue;
      out.at(r, c) = x.numerator() * exact_divide(l, x.denominator());
    }
  }
  return out;
}

struct Reduction {
  std::vector<std::size_t> pivot_cols;  // pivot column of row k
  Polynomial pivot = Polynomial(1);     // common value of every pivot entry
  int sign = 1;                         // parity of the row permutation
};

// Fraction-free Gauss-Jordan on the first `elim_cols` columns. Every
// intermediate entry is a minor of the input, so each division by the
// previous pivot is exact. On return each pivot row k has
// m(k, pivot_cols[k]) == pivot and zeros elsewhere in that column.
Reduction gauss_jordan(PolyMatrix& m, std::size_t elim_cols) {
  Reduction red;
  Polynomial prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < elim_cols && r < m.rows; ++col) {
    std::size_t best = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      const auto& x = m.at(i, col);
      if (x.is_zero()) continue;
      if (best == m.rows || x.term_count() < m.at(best, col).term_count()) best = i;
      if (x.is_constant()) break;
    }
    if (best == m.rows) continue;
    if (best != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(best, j), m.at(r, j));
      red.sign = -red.sign;
    }
    const Polynomial piv = m.at(r, col);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Polynomial f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j == col) continue;
        const auto& top = m.at(r, j);
        auto& x = m.at(i, j);
        if (f.is_zero() || top.is_zero()) {
          if (!x.is_zero()) x = exact_divide(piv * x, prev);
        } else {
          x = exact_divide(piv * x - f * top, prev);
        }
      }
      m.at(i, col) = Polynomial();
    }
    prev = piv;
    red.pivot_cols.push_back(col);
    ++r;
  }
  red.pivot = prev;
  return red;
}

}  // namespace

ParamScalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<Polynomial> scale;
  PolyMatrix pm = clear_denominators(m, scale);
  const Reduction red = gauss_jordan(pm, pm.cols);
  if (red.pivot_cols.size() < m.rows()) return 0;
  Polynomial total(1);
  for (const auto& s : scale) total *= s;
  return ParamScalar::fraction(red.pivot * Ratio(red.sign), total);
}

Inversion invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Polynomial> scale;
  PolyMatrix pm = clear_denominators(m, scale, n);
  for (std::size_t i = 0; i < n; ++i) pm.at(i, n + i) = Polynomial(1);
  const Reduction red = gauss_jordan(pm, n);
  Inversion out;
  if (red.pivot_cols.size() < n) {
    out.determinant = 0;
    return out;
  }
  Polynomial total(1);
  for (const auto& s : scale) total *= s;
  out.determinant = ParamScalar::fraction(red.pivot * Ratio(red.sign), total);
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = pm.at(i, n + j);
      if (e.is_zero()) continue;
      inv(i, j) = ParamScalar::fraction(e * scale[j], red.pivot);
    }
  }
  out.inverse = std::move(inv);
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<Polynomial> scale;
  PolyMatrix pm = clear_denominators(m, scale);
  const Reduction red = gauss_jordan(pm, pm.cols);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
      const auto& e = pm.at(k, f);
      if (!e.is_zero()) v[red.pivot_cols[k]] = ParamScalar::fraction(-e, red.pivot);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  std::vector<Polynomial> scale;
  PolyMatrix pm = clear_denominators(m, scale);
  return gauss_jordan(pm, pm.cols).pivot_cols.size();
}

}  // namespace ybx
