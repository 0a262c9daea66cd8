#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybx/algebra/algebra.hpp"
#include "ybx/lie_super/superalgebra.hpp"
#include "ybx/tensor/operator.hpp"

namespace ybx {

// ---------------------------------------------------------------------------
// Operators built from an associative algebra A.
// ---------------------------------------------------------------------------

/// R(a⊗b) = α ab⊗1 + β 1⊗ab − γ a⊗b
Operator2 dn_operator(const Algebra& A, const ParamScalar& alpha, const ParamScalar& beta,
                      const ParamScalar& gamma);

/// Parameter cases in which dn_operator is a Yang-Baxter operator:
/// i: α = γ ≠ 0, β ≠ 0; ii: β = γ ≠ 0, α ≠ 0; iii: α = β = 0, γ ≠ 0.
enum class DnCase { i, ii, iii, none };

const char* to_string(DnCase c);

/// Classifies constant parameters; case i wins when i and ii both hold.
/// Throws FreeIndeterminate if any parameter is not a constant.
DnCase classify_dn(const ParamScalar& alpha, const ParamScalar& beta, const ParamScalar& gamma);

/// Like classify_dn, but treats indeterminates generically: equalities and
/// non-vanishing are decided as identities of rational functions.
DnCase classify_dn_generic(const ParamScalar& alpha, const ParamScalar& beta,
                           const ParamScalar& gamma);

/// R^{-1} = R_{1/β, 1/α, 1/γ} in cases i and ii, R_{0,0,1/γ} in case iii.
/// Throws NotYangBaxter outside the cases.
Operator2 dn_inverse(const Algebra& A, const ParamScalar& alpha, const ParamScalar& beta,
                     const ParamScalar& gamma);

/// R(u,v)(a⊗b) = p(u−v) 1⊗ab + q(u−v) ab⊗1 − (pu−qv) b⊗a
Operator2 colored_operator(const Algebra& A, const ParamScalar& p, const ParamScalar& q,
                           const ParamScalar& u, const ParamScalar& v);

/// R(u,v)^{-1}(a⊗b) = p(u−v)/D ba⊗1 + q(u−v)/D 1⊗ba − 1/(pu−qv) b⊗a,
/// D = (qu−pv)(pu−qv). Throws InvertibilityLocus when pu−qv or qu−pv is
/// identically zero.
Operator2 colored_inverse(const Algebra& A, const ParamScalar& p, const ParamScalar& q,
                          const ParamScalar& u, const ParamScalar& v);

struct WxzTriple {
  Operator2 W;
  Operator2 X;
  Operator2 Z;
};

/// W(a⊗b) = ab⊗1 + λ 1⊗ab − b⊗a, Z(a⊗b) = μ ab⊗1 + 1⊗ab − b⊗a,
/// X(a⊗b) = ab⊗1 + 1⊗ab − b⊗a.
WxzTriple wxz_system(const Algebra& A, const ParamScalar& lambda, const ParamScalar& mu);

/// The 4x4 normal form [[1,0,0,0],[0,1,0,0],[0,1−q,q,0],[η,0,0,−q]] of the
/// two-dimensional solutions R∘τ, η ∈ {0, 1}.
Operator2 normal_form_solution(const ParamScalar& q, int eta);

// ---------------------------------------------------------------------------
// V = W ⊕ kc
// ---------------------------------------------------------------------------

class SplitSpace {
 public:
  SplitSpace(std::size_t total_dim, std::size_t c_index);
  std::size_t total_dim() const noexcept { return total_dim_; }
  std::size_t c_index() const noexcept { return c_index_; }
  const std::vector<std::size_t>& w_indices() const noexcept { return w_indices_; }

 private:
  std::size_t total_dim_;
  std::size_t c_index_;
  std::vector<std::size_t> w_indices_;
};

/// Linear map V⊗V -> V as an n x n^2 matrix (column = input basis tensor).
using TensorToSpace = Matrix;

/// R(v⊗w) = f(v⊗w)⊗c + c⊗g(v⊗w) for f, g : V⊗V -> V vanishing on
/// V⊗c + c⊗V. Throws SupportViolation naming the first offending basis
/// tensor.
Operator2 split_center_operator(const SplitSpace& space, const TensorToSpace& f,
                                const TensorToSpace& g);

/// Same, for f, g given as endomorphisms of V⊗V: f is read through its
/// V⊗c component and g through its c⊗V component. Both must vanish on
/// V⊗c + c⊗V.
Operator2 split_center_operator(const SplitSpace& space, const Operator2& f, const Operator2& g);

// ---------------------------------------------------------------------------
// Lie superalgebras
// ---------------------------------------------------------------------------

/// φ(x⊗y) = α [x,y]⊗z + (−1)^{|x||y|} y⊗x on homogeneous basis tensors.
/// Throws InvalidCenter unless z is even and central.
Operator2 super_phi(const LieSuperalgebra& L, const Coordinates& z, const ParamScalar& alpha);

/// x⊗y ↦ α z⊗[x,y] + (−1)^{|x||y|} y⊗x
Operator2 super_phi_inverse(const LieSuperalgebra& L, const Coordinates& z,
                            const ParamScalar& alpha);

/// x⊗y ↦ (−1)^{|x||y|} y⊗x
Operator2 graded_twist(const LieSuperalgebra& L);

}  // namespace ybx
