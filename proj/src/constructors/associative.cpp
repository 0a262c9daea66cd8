#include "builder.hpp"
#include "ybx/constructors/constructors.hpp"

namespace ybx {

namespace {

using detail::OperatorBuilder;

// a⊗b ↦ left·(ab)⊗1 + right·1⊗(ab) + swap·(b⊗a), with ab replaced by ba
// when `reversed_product`.
Operator2 product_swap_operator(const Algebra& A, const ParamScalar& left, const ParamScalar& right,
                                const ParamScalar& swap, bool reversed_product) {
  const std::size_t n = A.dim();
  OperatorBuilder out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t input = out.flat(i, j);
      const Coordinates& prod = reversed_product ? A.product_of_basis(j, i) : A.product_of_basis(i, j);
      out.add(input, left, prod, A.unit());
      out.add(input, right, A.unit(), prod);
      out.add_basis(input, swap, j, i);
    }
  }
  return std::move(out).finish();
}

}  // namespace

const char* to_string(DnCase c) {
  switch (c) {
    case DnCase::i:
      return "i";
    case DnCase::ii:
      return "ii";
    case DnCase::iii:
      return "iii";
    case DnCase::none:
      return "none";
  }
  return "none";
}

Operator2 dn_operator(const Algebra& A, const ParamScalar& alpha, const ParamScalar& beta,
                      const ParamScalar& gamma) {
  const std::size_t n = A.dim();
  OperatorBuilder out(n);
  const ParamScalar minus_gamma = -gamma;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t input = out.flat(i, j);
      const Coordinates& prod = A.product_of_basis(i, j);
      out.add(input, alpha, prod, A.unit());
      out.add(input, beta, A.unit(), prod);
      out.add_basis(input, minus_gamma, i, j);
    }
  }
  return std::move(out).finish();
}

DnCase classify_dn_generic(const ParamScalar& alpha, const ParamScalar& beta,
                           const ParamScalar& gamma) {
  if (alpha == gamma && !alpha.is_zero() && !beta.is_zero()) return DnCase::i;
  if (beta == gamma && !beta.is_zero() && !alpha.is_zero()) return DnCase::ii;
  if (alpha.is_zero() && beta.is_zero() && !gamma.is_zero()) return DnCase::iii;
  return DnCase::none;
}

DnCase classify_dn(const ParamScalar& alpha, const ParamScalar& beta, const ParamScalar& gamma) {
  for (const auto* s : {&alpha, &beta, &gamma}) {
    if (!s->is_constant()) {
      throw FreeIndeterminate("classification needs constant parameters, got " + s->to_string());
    }
  }
  return classify_dn_generic(alpha, beta, gamma);
}

Operator2 dn_inverse(const Algebra& A, const ParamScalar& alpha, const ParamScalar& beta,
                     const ParamScalar& gamma) {
  switch (classify_dn_generic(alpha, beta, gamma)) {
    case DnCase::i:
    case DnCase::ii:
      return dn_operator(A, beta.reciprocal(), alpha.reciprocal(), gamma.reciprocal());
    case DnCase::iii:
      return dn_operator(A, 0, 0, gamma.reciprocal());
    case DnCase::none:
      break;
  }
  throw NotYangBaxter("parameters (" + alpha.to_string() + ", " + beta.to_string() + ", " +
                      gamma.to_string() + ") lie outside cases i, ii, iii");
}

Operator2 colored_operator(const Algebra& A, const ParamScalar& p, const ParamScalar& q,
                           const ParamScalar& u, const ParamScalar& v) {
  const ParamScalar diff = u - v;
  return product_swap_operator(A, q * diff, p * diff, -(p * u - q * v), false);
}

Operator2 colored_inverse(const Algebra& A, const ParamScalar& p, const ParamScalar& q,
                          const ParamScalar& u, const ParamScalar& v) {
  const ParamScalar puqv = p * u - q * v;
  const ParamScalar qupv = q * u - p * v;
  if (puqv.is_zero()) {
    throw InvertibilityLocus("colored operator is not invertible: pu - qv vanishes", "p*u - q*v");
  }
  if (qupv.is_zero()) {
    throw InvertibilityLocus("colored operator is not invertible: qu - pv vanishes", "q*u - p*v");
  }
  const ParamScalar d = qupv * puqv;
  const ParamScalar diff = u - v;
  return product_swap_operator(A, p * diff / d, q * diff / d, -puqv.reciprocal(), true);
}

WxzTriple wxz_system(const Algebra& A, const ParamScalar& lambda, const ParamScalar& mu) {
  return WxzTriple{product_swap_operator(A, 1, lambda, -1, false),
                   product_swap_operator(A, 1, 1, -1, false),
                   product_swap_operator(A, mu, 1, -1, false)};
}

Operator2 normal_form_solution(const ParamScalar& q, int eta) {
  if (eta != 0 && eta != 1) throw std::invalid_argument("eta must be 0 or 1");
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  Matrix m(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 1) = 1 - q;
  m(2, 2) = q;
  m(3, 0) = eta;
  m(3, 3) = -q;
  return Operator2(2, std::move(m));
}

}  // namespace ybx
