#include "ybx/tensor/operator.hpp"

namespace ybx {

Operator2 twist(std::size_t n) {
  if (n == 0) throw ShapeError("twist needs a positive dimension");
  Matrix m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(j * n + i, i * n + j) = 1;
  }
  return Operator2(n, std::move(m));
}

const char* to_string(Legs legs) {
  switch (legs) {
    case Legs::l12:
      return "12";
    case Legs::l23:
      return "23";
    case Legs::l13:
      return "13";
  }
  return "?";
}

Operator3 embed(const Operator2& r, Legs legs) {
  const std::size_t n = r.dim();
  const std::size_t n2 = n * n;
  Matrix m(n2 * n, n2 * n);
  // Input (a', b', c') to output (a, b, c); R sees the legs it acts on.
  for (std::size_t in = 0; in < n2; ++in) {
    for (std::size_t out = 0; out < n2; ++out) {
      const ParamScalar& x = r(out, in);
      if (x.is_zero()) continue;
      const std::size_t ia = in / n, ib = in % n, oa = out / n, ob = out % n;
      for (std::size_t spectator = 0; spectator < n; ++spectator) {
        switch (legs) {
          case Legs::l12:
            m(oa * n2 + ob * n + spectator, ia * n2 + ib * n + spectator) = x;
            break;
          case Legs::l23:
            m(spectator * n2 + oa * n + ob, spectator * n2 + ia * n + ib) = x;
            break;
          case Legs::l13:
            m(oa * n2 + spectator * n + ob, ia * n2 + spectator * n + ib) = x;
            break;
        }
      }
    }
  }
  return Operator3(n, std::move(m));
}

OperatorInversion inverse(const Operator2& r) {
  Inversion inv = invert(r.matrix());
  OperatorInversion out;
  out.determinant = std::move(inv.determinant);
  if (inv.inverse) out.inverse = Operator2(r.dim(), std::move(*inv.inverse));
  return out;
}

}  // namespace ybx
