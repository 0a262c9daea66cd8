#include "builder.hpp"
#include "ybx/constructors/constructors.hpp"

namespace ybx {

namespace {

void check_center(const LieSuperalgebra& L, const Coordinates& z) {
  if (z.size() != L.dim()) throw DimensionMismatch("z has the wrong length");
  if (!L.is_even(z)) throw InvalidCenter("z has a component along an odd basis vector");
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Coordinates b = L.bracket(z, L.basis_vector(j));
    for (const auto& s : b) {
      if (!s.is_zero()) {
        throw InvalidCenter("z is not central: [z, " + L.labels()[j] + "] != 0");
      }
    }
  }
}

// x⊗y ↦ α·(bracket placed left or right of z) + (−1)^{|x||y|} y⊗x
Operator2 phi_like(const LieSuperalgebra& L, const Coordinates& z, const ParamScalar& alpha,
                   bool bracket_first) {
  check_center(L, z);
  const std::size_t n = L.dim();
  detail::OperatorBuilder out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t input = out.flat(i, j);
      if (!alpha.is_zero()) {
        const Coordinates& br = L.bracket_table()[i][j];
        if (bracket_first) {
          out.add(input, alpha, br, z);
        } else {
          out.add(input, alpha, z, br);
        }
      }
      out.add_basis(input, L.sign(i, j), j, i);
    }
  }
  return std::move(out).finish();
}

}  // namespace

Operator2 super_phi(const LieSuperalgebra& L, const Coordinates& z, const ParamScalar& alpha) {
  return phi_like(L, z, alpha, true);
}

Operator2 super_phi_inverse(const LieSuperalgebra& L, const Coordinates& z,
                            const ParamScalar& alpha) {
  return phi_like(L, z, alpha, false);
}

Operator2 graded_twist(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  detail::OperatorBuilder out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.add_basis(out.flat(i, j), L.sign(i, j), j, i);
  }
  return std::move(out).finish();
}

}  // namespace ybx
