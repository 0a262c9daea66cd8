#include "ybx/verify/verify.hpp"

namespace ybx {

SampleGrid::SampleGrid(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SampleGrid::next_index(std::uint64_t bound) { return engine_() % bound; }

Ratio SampleGrid::next() {
  const auto num = static_cast<long>(next_index(19)) - 9;
  const auto den = static_cast<long>(next_index(4)) + 1;
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ybx
