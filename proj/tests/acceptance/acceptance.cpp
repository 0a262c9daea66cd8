// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Run from the repository root so fixtures/ resolves.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracle.hpp"
#include "ybx/errors.hpp"
#include "ybx/io/json_io.hpp"
#include "ybx/verify/verify.hpp"

namespace {

using ybx::Algebra;
using ybx::Coordinates;
using ybx::LieSuperalgebra;
using ybx::Matrix;
using ybx::Operator2;
using ybx::ParamScalar;
using ybx::StructureTable;

ParamScalar var(const char* name) { return ParamScalar::indeterminate(name); }

// Collects failure reasons for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::string describe(const ybx::VerificationReport& r) {
  if (r.passed()) return "pass";
  std::ostringstream s;
  s << "fail at " << r.witness->condition;
  if (r.witness->entry) s << " entry (" << r.witness->entry->first << ", " << r.witness->entry->second << ")";
  if (!r.witness->value.empty()) s << " = " << r.witness->value;
  return s.str();
}

void require_pass(Outcome& o, const ybx::VerificationReport& r, const std::string& what) {
  o.require(r.passed(), what + ": " + describe(r));
}

Algebra quadratic_symbolic() { return ybx::quadratic_quotient_algebra(var("m"), var("n")); }
Algebra sigma_algebra() { return ybx::quadratic_quotient_algebra(0, var("sigma")); }

// The displayed matrix of R_{α,β,α} on k[X]/(X²−mX−n), printed row by row.
Matrix printed_matrix_three() {
  const ParamScalar a = var("alpha"), b = var("beta"), m = var("m"), n = var("n");
  return Matrix::from_rows({{b, 0, 0, 0}, {0, b - a, a, 0}, {0, 0, b, 0}, {(a + b) * n, b * m, a * m, -a}});
}

// The displayed action on 1⊗1, 1⊗x, x⊗1, x⊗x, one image per row.
Matrix action_list_three() {
  const ParamScalar a = var("alpha"), b = var("beta"), m = var("m"), n = var("n");
  return Matrix::from_rows({{b, 0, 0, 0}, {0, b - a, a, 0}, {0, b, 0, 0}, {(a + b) * n, b * m, a * m, -a}});
}

Matrix printed_matrix_four(const ParamScalar& q, int eta) {
  return Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1 - q, q, 0}, {eta, 0, 0, -q}});
}

Matrix printed_sigma_matrix() {
  const ParamScalar p = var("p"), q = var("q"), u = var("u"), v = var("v"), s = var("sigma");
  return Matrix::from_rows({{q * u - p * v, 0, 0, s * (q + p) * (u - v)},
                            {0, p * (u - v), (q - p) * v, 0},
                            {0, (q - p) * u, q * (u - v), 0},
                            {0, 0, 0, q * v - p * u}});
}

void forward_cases(Outcome& o) {
  const Algebra A = quadratic_symbolic();
  const ParamScalar a = var("a"), b = var("b"), c = var("c");
  const struct {
    const char* name;
    Operator2 r;
  } cases[] = {
      {"i", ybx::dn_operator(A, a, b, a)},
      {"ii", ybx::dn_operator(A, a, b, b)},
      {"iii", ybx::dn_operator(A, 0, 0, c)},
  };
  for (const auto& [name, r] : cases) {
    require_pass(o, ybx::verify_constant(r, ybx::Equation::braid), std::string("case ") + name);
  }
  o.summary = "cases i, ii, iii symbolic in m, n and the case parameters";
}

void converse_grid(Outcome& o) {
  const Algebra algebras[] = {ybx::load_algebra("fixtures/quadratic.json"),
                              ybx::load_algebra("fixtures/upper-triangular.json")};
  std::size_t solutions = 0;
  for (const Algebra& A : algebras) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          const Operator2 r = ybx::dn_operator(A, a, b, c);
          const bool in_case = ybx::classify_dn(a, b, c) != ybx::DnCase::none;
          const bool braid = ybx::braid_defect(r).is_zero();
          const auto inv = ybx::inverse(r);
          const bool inverts = inv.invertible() && ybx::compose(r, *inv.inverse) == Operator2::identity(A.dim()) &&
                               ybx::compose(*inv.inverse, r) == Operator2::identity(A.dim());
          std::ostringstream where;
          where << "dim " << A.dim() << " (" << a << ", " << b << ", " << c << ")";
          o.require((braid && inverts) == in_case, where.str() + (in_case ? " should" : " should not") +
                                                         " be a Yang-Baxter operator");
          if (in_case) ++solutions;
        }
  }
  o.summary = std::to_string(solutions) + " solutions among 2 x 64 tuples";
}

void inverse_formulas(Outcome& o) {
  const Algebra A = quadratic_symbolic();
  const ParamScalar a = var("a"), b = var("b"), c = var("c");
  require_pass(o, ybx::verify_inverse_pair(ybx::dn_operator(A, a, b, a), ybx::dn_inverse(A, a, b, a)), "dn case i");
  require_pass(o, ybx::verify_inverse_pair(ybx::dn_operator(A, a, b, b), ybx::dn_inverse(A, a, b, b)),
               "dn case ii");
  require_pass(o, ybx::verify_inverse_pair(ybx::dn_operator(A, 0, 0, c), ybx::dn_inverse(A, 0, 0, c)),
               "dn case iii");
  const ParamScalar p = var("p"), q = var("q"), u = var("u"), v = var("v");
  for (const Algebra& B : {A, sigma_algebra()}) {
    require_pass(o,
                 ybx::verify_inverse_pair(ybx::colored_operator(B, p, q, u, v), ybx::colored_inverse(B, p, q, u, v)),
                 "colored");
  }
  const LieSuperalgebra gl = ybx::general_linear_1_1();
  const Coordinates z{1, 1, 0, 0};
  require_pass(o,
               ybx::verify_inverse_pair(ybx::super_phi(gl, z, var("alpha")), ybx::super_phi_inverse(gl, z, var("alpha"))),
               "superalgebra operator");
  o.summary = "dn cases i-iii, colored on two algebras, superalgebra operator";
}

void sigma_golden(Outcome& o) {
  const Operator2 r = ybx::colored_operator(sigma_algebra(), var("p"), var("q"), var("u"), var("v"));
  o.require(r.matrix() == printed_sigma_matrix(), "generated matrix differs from the displayed one");
  require_pass(o,
               ybx::compare_display(r, printed_sigma_matrix(), ybx::DisplayConvention::columns_are_images,
                                    ybx::tensor_labels({"1", "x"})),
               "display comparison");
  o.summary = "16 entries equal";
}

void matrix_three(Outcome& o) {
  const Operator2 r = ybx::dn_operator(quadratic_symbolic(), var("alpha"), var("beta"), var("alpha"));
  const auto names = ybx::tensor_labels({"1", "x"});
  require_pass(o, ybx::compare_display(r, action_list_three(), ybx::DisplayConvention::rows_are_images, names),
               "action list");
  const auto printed = ybx::compare_display(r, printed_matrix_three(), ybx::DisplayConvention::rows_are_images, names);
  o.require(printed.checks.size() == 4, "expected four image checks");
  for (std::size_t t = 0; t < printed.checks.size(); ++t) {
    const bool expect_fail = t == 2;
    o.require((printed.checks[t].status == ybx::Status::fail) == expect_fail,
              printed.checks[t].label + (expect_fail ? " should be flagged" : " should match"));
  }
  o.require(printed.witness && printed.witness->condition == "image of x⊗1", "witness should name x⊗1");
  if (printed.witness) o.summary = "flagged " + printed.witness->condition + ": " + printed.witness->value;
}

void matrix_four(Outcome& o) {
  const ParamScalar q = var("q");
  for (int eta : {0, 1}) {
    const Operator2 r(2, printed_matrix_four(q, eta));
    o.require(r == ybx::normal_form_solution(q, eta), "constructor differs for eta = " + std::to_string(eta));
    require_pass(o, ybx::verify_constant(r, ybx::Equation::qybe), "eta = " + std::to_string(eta));
  }
  o.summary = "eta = 0, 1 with symbolic q";
}

void colored(Outcome& o) {
  const auto symbolic = ybx::verify_colored_family(sigma_algebra(), var("p"), var("q"), ybx::Mode::symbolic);
  require_pass(o, symbolic, "symbolic");
  ybx::SampleOptions options;
  options.count = 50;
  options.seed = 2024;
  options.threads = 0;
  const auto sampled = ybx::verify_colored_family(ybx::load_algebra("fixtures/upper-triangular.json"), var("p"),
                                                  var("q"), ybx::Mode::sampled, options);
  require_pass(o, sampled, "sampled");
  o.require(sampled.samples_evaluated == 50, "expected 50 evaluated samples");
  o.summary = "symbolic dim 2; " + std::to_string(sampled.samples_evaluated) + " samples dim 3 (" +
              std::to_string(sampled.samples_skipped) + " skipped)";
}

void wxz(Outcome& o) {
  const auto r = ybx::verify_wxz(ybx::wxz_system(quadratic_symbolic(), var("lambda"), var("mu")));
  require_pass(o, r, "wxz");
  o.require(r.checks.size() == 4, "expected four conditions");
  o.summary = std::to_string(r.checks.size()) + " conditions";
}

void split_center(Outcome& o) {
  const ybx::SplitSpace space(3, 2);
  ybx::SampleOptions options;
  options.count = 100;
  options.seed = 4;
  options.threads = 0;
  const auto r = ybx::verify_split_center_sampled(space, options);
  require_pass(o, r, "admissible pairs");
  o.require(r.samples_evaluated == 100, "expected 100 pairs");

  // nonzero on exactly one basis tensor of V⊗c + c⊗V
  ybx::SampleGrid grid(5);
  std::size_t rejected = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ybx::TensorToSpace f = ybx::random_admissible_map(space, grid);
    ybx::TensorToSpace g = ybx::random_admissible_map(space, grid);
    const std::size_t other = grid.next_index(3);
    const bool c_first = grid.next_index(2) == 0;
    const std::size_t left = c_first ? 2 : other, right = c_first ? other : 2;
    ybx::TensorToSpace& target = trial % 2 == 0 ? f : g;
    target(grid.next_index(3), left * 3 + right) = ParamScalar(static_cast<long>(grid.next_index(9)) + 1);
    try {
      ybx::split_center_operator(space, f, g);
      o.require(false, "inadmissible pair " + std::to_string(trial) + " accepted");
    } catch (const ybx::SupportViolation& e) {
      o.require(e.left() == left && e.right() == right,
                "pair " + std::to_string(trial) + " rejected at the wrong tensor");
      ++rejected;
    }
  }
  o.summary = std::to_string(r.samples_evaluated) + " pairs pass, " + std::to_string(rejected) +
              " inadmissible pairs rejected";
}

void super_operator(Outcome& o) {
  const ParamScalar alpha = var("alpha");
  const LieSuperalgebra gl = ybx::general_linear_1_1();
  const LieSuperalgebra abelian = ybx::load_superalgebra("fixtures/abelian-super.json");
  const struct {
    const char* name;
    const LieSuperalgebra& L;
    Coordinates z;
  } cases[] = {
      {"gl(1|1)", gl, Coordinates{1, 1, 0, 0}},
      {"abelian", abelian, ybx::even_center(abelian).at(0)},
  };
  for (const auto& [name, L, z] : cases) {
    const Operator2 phi = ybx::super_phi(L, z, alpha);
    require_pass(o, ybx::verify_constant(phi, ybx::Equation::braid), std::string(name) + " braid");
    require_pass(o, ybx::verify_inverse_pair(phi, ybx::super_phi_inverse(L, z, alpha)),
                 std::string(name) + " inverse");
  }
  o.summary = "gl(1|1) with z = E11 + E22 and the abelian fixture";
}

void equivalence(Outcome& o) {
  std::vector<std::pair<std::string, Operator2>> ops;
  oracle::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    ops.emplace_back("random " + std::to_string(i), Operator2(2, oracle::to_matrix(oracle::random_matrix(rng, 4))));
  }
  const Algebra A = quadratic_symbolic();
  const ParamScalar a = var("a"), b = var("b"), c = var("c");
  ops.emplace_back("dn case i", ybx::dn_operator(A, a, b, a));
  ops.emplace_back("dn case ii", ybx::dn_operator(A, a, b, b));
  ops.emplace_back("dn case iii", ybx::dn_operator(A, 0, 0, c));
  ops.emplace_back("dn case i inverse", ybx::dn_inverse(A, a, b, a));
  for (int eta : {0, 1}) {
    ops.emplace_back("normal form " + std::to_string(eta),
                     ybx::compose(ybx::normal_form_solution(var("q"), eta), ybx::twist(2)));
  }
  const auto t = ybx::wxz_system(A, var("lambda"), var("mu"));
  ops.emplace_back("W", t.W);
  ops.emplace_back("X", t.X);
  ops.emplace_back("Z", t.Z);
  const LieSuperalgebra gl = ybx::general_linear_1_1();
  ops.emplace_back("superalgebra operator", ybx::super_phi(gl, Coordinates{1, 1, 0, 0}, var("alpha")));
  ops.emplace_back("graded twist", ybx::graded_twist(gl));
  ybx::SampleGrid grid(12);
  const ybx::SplitSpace space(3, 2);
  ops.emplace_back("split center", ybx::split_center_operator(space, ybx::random_admissible_map(space, grid),
                                                              ybx::random_admissible_map(space, grid)));
  ops.emplace_back("twist", ybx::twist(3));

  std::size_t braided = 0;
  for (const auto& [name, r] : ops) {
    const Operator2 tau = ybx::twist(r.dim());
    const bool braid = ybx::braid_defect(r).is_zero();
    const bool right = ybx::qybe_defect(ybx::compose(r, tau)).is_zero();
    const bool left = ybx::qybe_defect(ybx::compose(tau, r)).is_zero();
    o.require(braid == right && braid == left, name + ": conditions disagree");
    if (braid) ++braided;
  }
  o.summary = std::to_string(ops.size()) + " operators, " + std::to_string(braided) + " braided";
}

StructureTable zero_table(std::size_t n) { return StructureTable(n, std::vector<Coordinates>(n, Coordinates(n))); }

void validators(Outcome& o) {
  oracle::Rng rng(12);
  std::size_t rejected = 0, accepted = 0;
  auto tally = [&](const ybx::VerificationReport& r, const std::optional<std::vector<std::size_t>>& expected,
                   const char* axiom, const std::string& where) {
    if (!expected) {
      o.require(r.passed(), where + ": valid table rejected");
      ++accepted;
      return;
    }
    o.require(!r.passed() && r.witness->condition == axiom && r.witness->indices == *expected,
              where + ": wrong verdict or witness");
    ++rejected;
  };

  // associativity: k[x, y]/(x, y)^2 with random products among x, y
  for (int trial = 0; trial < 20; ++trial) {
    StructureTable c = zero_table(3);
    for (std::size_t i = 0; i < 3; ++i) c[0][i][i] = c[i][0][i] = 1;
    c[1 + rng.next() % 2][1 + rng.next() % 2][rng.next() % 3] = rng.range(1, 3);
    tally(ybx::verify_algebra_axioms(3, c, {1, 0, 0}), oracle::associativity_witness(c), "associativity",
          "associativity " + std::to_string(trial));
  }

  // unit: upper-triangular matrices with a perturbed unit
  const Algebra tri = ybx::load_algebra("fixtures/upper-triangular.json");
  for (int trial = 0; trial < 20; ++trial) {
    Coordinates unit = tri.unit();
    unit[rng.next() % 3] += ParamScalar(rng.range(-2, 2));
    const auto w = oracle::unit_witness(tri.structure(), unit);
    tally(ybx::verify_algebra_axioms(3, tri.structure(), unit),
          w ? std::optional(std::vector<std::size_t>{*w}) : std::nullopt, "unit", "unit " + std::to_string(trial));
  }

  // super Jacobi: gl(1|1) with random odd-odd brackets, grading and super
  // antisymmetry kept
  const LieSuperalgebra gl = ybx::general_linear_1_1();
  for (int trial = 0; trial < 20; ++trial) {
    StructureTable b = gl.bracket_table();
    const std::size_t i = 2 + rng.next() % 2, j = 2 + rng.next() % 2;
    b[i][j] = b[j][i] = Coordinates{rng.range(-2, 2), rng.range(-2, 2), 0, 0};
    tally(ybx::verify_super_axioms(4, gl.degrees(), b), oracle::jacobi_witness(b, gl.degrees()), "jacobi",
          "jacobi " + std::to_string(trial));
  }
  o.require(rejected > 0, "no corrupted table was rejected");
  o.summary = std::to_string(rejected) + " corrupted tables rejected, " + std::to_string(accepted) +
              " still-valid tables accepted";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "constant family, forward direction", 10, forward_cases},
      {2, "constant family, converse on the 4^3 grid", 30, converse_grid},
      {3, "inverse formulas round-trip", 10, inverse_formulas},
      {4, "sigma matrix golden test", 1, sigma_golden},
      {5, "matrix of R_{a,b,a} against action list and display", 1, matrix_three},
      {6, "normal forms satisfy the quantum equation", 1, matrix_four},
      {7, "colored equation, symbolic and sampled", 60, colored},
      {8, "WXZ system", 30, wxz},
      {9, "split-center property suite", 60, split_center},
      {10, "superalgebra operator", 60, super_operator},
      {11, "braid / quantum equivalence", 30, equivalence},
      {12, "validator negative tests", 10, validators},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      std::ostringstream s;
      s << "runtime " << seconds << " s exceeds " << c.limit_seconds << " s";
      o.failures.push_back(s.str());
    }
    const bool ok = o.failures.empty();
    if (!ok) ++failed;
    std::ostringstream timing;
    timing.setf(std::ios::fixed);
    timing.precision(3);
    timing << seconds << " s / " << c.limit_seconds << " s";
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing.str()
              << "]";
    if (!o.summary.empty()) std::cout << " " << o.summary;
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (failed == 0 ? "all 12 criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
