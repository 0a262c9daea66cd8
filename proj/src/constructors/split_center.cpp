#include "builder.hpp"
#include "ybx/constructors/constructors.hpp"

namespace ybx {

SplitSpace::SplitSpace(std::size_t total_dim, std::size_t c_index)
    : total_dim_(total_dim), c_index_(c_index) {
  if (total_dim == 0) throw ShapeError("split space needs a positive dimension");
  if (c_index >= total_dim) throw ShapeError("c index outside the space");
  for (std::size_t i = 0; i < total_dim; ++i) {
    if (i != c_index) w_indices_.push_back(i);
  }
}

namespace {

void check_support(const SplitSpace& space, const Matrix& map, const char* name) {
  const std::size_t n = space.total_dim();
  const std::size_t c = space.c_index();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != c && j != c) continue;
      const std::size_t input = i * n + j;
      for (std::size_t r = 0; r < map.rows(); ++r) {
        if (!map(r, input).is_zero()) {
          throw SupportViolation(std::string(name) + " is nonzero on e" + std::to_string(i) + "⊗e" +
                                     std::to_string(j) + ", which involves c",
                                 i, j);
        }
      }
    }
  }
}

}  // namespace

Operator2 split_center_operator(const SplitSpace& space, const TensorToSpace& f,
                                const TensorToSpace& g) {
  const std::size_t n = space.total_dim();
  for (const auto* m : {&f, &g}) {
    if (m->rows() != n || m->cols() != n * n) {
      throw ShapeError("f and g must be " + std::to_string(n) + "x" + std::to_string(n * n));
    }
  }
  check_support(space, f, "f");
  check_support(space, g, "g");
  const std::size_t c = space.c_index();
  detail::OperatorBuilder out(n);
  for (std::size_t input = 0; input < n * n; ++input) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!f(k, input).is_zero()) out.add_basis(input, f(k, input), k, c);
      if (!g(k, input).is_zero()) out.add_basis(input, g(k, input), c, k);
    }
  }
  return std::move(out).finish();
}

Operator2 split_center_operator(const SplitSpace& space, const Operator2& f, const Operator2& g) {
  const std::size_t n = space.total_dim();
  if (f.dim() != n || g.dim() != n) throw DimensionMismatch("f and g must act on V⊗V");
  check_support(space, f.matrix(), "f");
  check_support(space, g.matrix(), "g");
  const std::size_t c = space.c_index();
  TensorToSpace fhat(n, n * n), ghat(n, n * n);
  for (std::size_t input = 0; input < n * n; ++input) {
    for (std::size_t k = 0; k < n; ++k) {
      fhat(k, input) = f(k * n + c, input);
      ghat(k, input) = g(c * n + k, input);
    }
  }
  return split_center_operator(space, fhat, ghat);
}

}  // namespace ybx
