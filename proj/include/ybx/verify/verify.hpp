#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "ybx/constructors/constructors.hpp"
#include "ybx/verify/report.hpp"

namespace ybx {

enum class Equation { braid, qybe };

/// Deterministic stream of small rationals (numerators in [-9, 9],
/// denominators in [1, 4]) drawn from a seeded mt19937_64. Only raw engine
/// output is used, so the stream is identical on every platform.
class SampleGrid {
 public:
  explicit SampleGrid(std::uint64_t seed);
  Ratio next();
  std::uint64_t next_index(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct SampleOptions {
  std::size_t count = 50;
  std::uint64_t seed = 0;
  /// Worker threads for evaluating sample points; 0 = hardware concurrency.
  std::size_t threads = 1;
};

/// Pass iff the chosen defect of R is the zero matrix.
VerificationReport verify_constant(const Operator2& r, Equation which);

/// Evaluates R at `options.count` points of its indeterminates and checks
/// the defect at each. Points where an entry has a pole are skipped.
VerificationReport verify_constant_sampled(const Operator2& r, Equation which,
                                           const SampleOptions& options);

/// A spectral-parameter family R(u, v).
struct SpectralFamily {
  std::function<Operator2(const ParamScalar& u, const ParamScalar& v)> build;
  /// Indeterminates the family depends on besides u and v.
  std::set<std::string> parameters;
  /// True when (u, v) lies on an excluded locus at the given values of the
  /// parameters. When empty, points with a singular R(u,v) are excluded.
  std::function<bool(const Assignment& params, const Ratio& u, const Ratio& v)> excluded;
};

/// Family u,v ↦ colored_operator(A, p, q, u, v), excluded on pu = qv and
/// qu = pv.
SpectralFamily colored_family(const Algebra& A, const ParamScalar& p, const ParamScalar& q);

/// Checks R^{12}(u,v)R^{13}(u,w)R^{23}(v,w) = R^{23}(v,w)R^{13}(u,w)R^{12}(u,v).
/// Symbolic mode uses fresh indeterminates for u, v, w; sampled mode draws
/// u, v, w and every family parameter from the seeded grid.
VerificationReport verify_colored(const SpectralFamily& family, Mode mode,
                                  const SampleOptions& options = {});

VerificationReport verify_colored_family(const Algebra& A, const ParamScalar& p,
                                         const ParamScalar& q, Mode mode,
                                         const SampleOptions& options = {});

/// [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z] all zero; the witness names the first
/// failing condition.
VerificationReport verify_wxz(const WxzTriple& t);

/// R∘Rinv = I and Rinv∘R = I.
VerificationReport verify_inverse_pair(const Operator2& r, const Operator2& rinv);

/// Runs the algebra validator and reports instead of throwing.
VerificationReport verify_algebra_axioms(std::size_t dim, const StructureTable& structure,
                                         const Coordinates& unit);

VerificationReport verify_super_axioms(std::size_t dim, const std::vector<int>& degree,
                                       const StructureTable& bracket);

/// Random f : V⊗V -> V with entries from the grid, zero on V⊗c + c⊗V.
TensorToSpace random_admissible_map(const SplitSpace& space, SampleGrid& grid);

/// qybe_defect of split_center_operator on `options.count` random
/// admissible pairs (f, g).
VerificationReport verify_split_center_sampled(const SplitSpace& space,
                                               const SampleOptions& options);

enum class DisplayConvention {
  columns_are_images,  // column t of the display is the image of basis tensor t
  rows_are_images,     // row t of the display is the image of basis tensor t
};

/// Compares an operator with a displayed matrix, one check per basis
/// tensor image. A mismatching image fails the report; the witness names
/// the first mismatching image and entry.
VerificationReport compare_display(const Operator2& generated, const Matrix& display,
                                   DisplayConvention convention,
                                   const std::vector<std::string>& tensor_names = {});

}  // namespace ybx
