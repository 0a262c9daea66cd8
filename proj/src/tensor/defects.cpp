#include "ybx/tensor/operator.hpp"

namespace ybx {

namespace {

Operator3 triple(const Operator3& a, const Operator3& b, const Operator3& c) {
  return compose(compose(a, b), c);
}

}  // namespace

Operator3 yb_commutator(const Operator2& r, const Operator2& s, const Operator2& t) {
  Operator2::check_same(r, s);
  Operator2::check_same(r, t);
  const Operator3 r12 = embed(r, Legs::l12);
  const Operator3 s13 = embed(s, Legs::l13);
  const Operator3 t23 = embed(t, Legs::l23);
  return triple(r12, s13, t23) - triple(t23, s13, r12);
}

Operator3 braid_defect(const Operator2& r) {
  const Operator3 r12 = embed(r, Legs::l12);
  const Operator3 r23 = embed(r, Legs::l23);
  return triple(r12, r23, r12) - triple(r23, r12, r23);
}

Operator3 qybe_defect(const Operator2& r) { return yb_commutator(r, r, r); }

Operator3 colored_defect(const Operator2& ruv, const Operator2& ruw, const Operator2& rvw) {
  return yb_commutator(ruv, ruw, rvw);
}

}  // namespace ybx
