#include "ybx/verify/verify.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace ybx {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Witness> nonzero_witness(const Matrix& defect, const std::string& condition) {
  auto at = defect.first_nonzero();
  if (!at) return std::nullopt;
  Witness w;
  w.condition = condition;
  w.entry = at;
  w.value = defect(at->first, at->second).to_string();
  return w;
}

void finish(VerificationReport& report, Clock::time_point start) {
  report.status = report.witness ? Status::fail : Status::pass;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

Operator3 defect_of(const Operator2& r, Equation which) {
  return which == Equation::braid ? braid_defect(r) : qybe_defect(r);
}

const char* condition_of(Equation which) {
  return which == Equation::braid ? "R12 R23 R12 = R23 R12 R23" : "R12 R13 R23 = R23 R13 R12";
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.contains(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!taken.contains(candidate)) return candidate;
  }
}

std::vector<std::pair<std::string, std::string>> describe_point(const Assignment& point) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, value] : point) out.emplace_back(name, format_ratio(value));
  return out;
}

// Evaluation of one sample point: skipped, or a (possibly absent) witness.
struct SampleOutcome {
  bool skipped = false;
  std::optional<Witness> witness;
};

template <class F>
std::vector<SampleOutcome> evaluate_points(std::size_t count, std::size_t threads, F evaluate) {
  std::vector<SampleOutcome> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = evaluate(i);
    return out;
  }
  std::vector<std::future<void>> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < count; i += threads) out[i] = evaluate(i);
    }));
  }
  for (auto& w : workers) w.get();
  return out;
}

// Merges per-point outcomes in input order; the witness is the first
// failing point.
void merge_outcomes(VerificationReport& report, const std::vector<SampleOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (o.skipped) {
      ++report.samples_skipped;
      continue;
    }
    ++report.samples_evaluated;
    if (o.witness && !report.witness) report.witness = o.witness;
  }
}

}  // namespace

VerificationReport verify_constant(const Operator2& r, Equation which) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = which == Equation::braid ? Identity::braid : Identity::qybe;
  report.mode = Mode::symbolic;
  report.witness = nonzero_witness(defect_of(r, which).matrix(), condition_of(which));
  report.checks.push_back({condition_of(which), report.witness ? Status::fail : Status::pass});
  finish(report, start);
  return report;
}

VerificationReport verify_constant_sampled(const Operator2& r, Equation which,
                                           const SampleOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = which == Equation::braid ? Identity::braid : Identity::qybe;
  report.mode = Mode::sampled;
  const std::set<std::string> names = r.matrix().indeterminates();
  const std::size_t count = names.empty() ? 1 : options.count;
  SampleGrid grid(options.seed);
  std::vector<Assignment> points(count);
  for (auto& point : points) {
    for (const auto& name : names) point[name] = grid.next();
  }
  const auto outcomes = evaluate_points(count, options.threads, [&](std::size_t i) {
    SampleOutcome o;
    Operator2 at;
    try {
      at = r.evaluate(points[i]);
    } catch (const PoleError&) {
      o.skipped = true;
      return o;
    }
    o.witness = nonzero_witness(defect_of(at, which).matrix(), condition_of(which));
    if (o.witness) o.witness->point = describe_point(points[i]);
    return o;
  });
  merge_outcomes(report, outcomes);
  report.checks.push_back({condition_of(which), report.witness ? Status::fail : Status::pass});
  report.add_note("seed", std::to_string(options.seed));
  finish(report, start);
  return report;
}

SpectralFamily colored_family(const Algebra& A, const ParamScalar& p, const ParamScalar& q) {
  SpectralFamily family;
  family.build = [A, p, q](const ParamScalar& u, const ParamScalar& v) {
    return colored_operator(A, p, q, u, v);
  };
  family.parameters = A.indeterminates();
  for (const auto* s : {&p, &q}) {
    auto names = s->indeterminates();
    family.parameters.insert(names.begin(), names.end());
  }
  family.excluded = [p, q](const Assignment& params, const Ratio& u, const Ratio& v) {
    const Ratio pv = p.evaluate(params);
    const Ratio qv = q.evaluate(params);
    return pv * u == qv * v || qv * u == pv * v;
  };
  return family;
}

VerificationReport verify_colored(const SpectralFamily& family, Mode mode,
                                  const SampleOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = Identity::colored;
  report.mode = mode;
  const std::string condition = "R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)";

  if (mode == Mode::symbolic) {
    std::set<std::string> taken = family.parameters;
    const std::string un = fresh_name("u", taken);
    taken.insert(un);
    const std::string vn = fresh_name("v", taken);
    taken.insert(vn);
    const std::string wn = fresh_name("w", taken);
    const auto u = ParamScalar::indeterminate(un);
    const auto v = ParamScalar::indeterminate(vn);
    const auto w = ParamScalar::indeterminate(wn);
    const Operator3 defect = colored_defect(family.build(u, v), family.build(u, w), family.build(v, w));
    report.witness = nonzero_witness(defect.matrix(), condition);
    report.add_note("spectral parameters", un + ", " + vn + ", " + wn);
    report.checks.push_back({condition, report.witness ? Status::fail : Status::pass});
    finish(report, start);
    return report;
  }

  struct Point {
    Assignment params;
    Ratio u, v, w;
  };
  SampleGrid grid(options.seed);
  std::vector<Point> points;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 20 * std::max<std::size_t>(options.count, 1);
  while (points.size() < options.count && attempts < max_attempts) {
    ++attempts;
    Point pt;
    for (const auto& name : family.parameters) pt.params[name] = grid.next();
    pt.u = grid.next();
    pt.v = grid.next();
    pt.w = grid.next();
    if (family.excluded) {
      bool skip = false;
      try {
        skip = family.excluded(pt.params, pt.u, pt.v) || family.excluded(pt.params, pt.u, pt.w) ||
               family.excluded(pt.params, pt.v, pt.w);
      } catch (const PoleError&) {
        skip = true;
      }
      if (skip) {
        ++report.samples_skipped;
        continue;
      }
    }
    points.push_back(std::move(pt));
  }

  const auto outcomes = evaluate_points(points.size(), options.threads, [&](std::size_t i) {
    const Point& pt = points[i];
    SampleOutcome o;
    Operator2 ruv, ruw, rvw;
    try {
      ruv = family.build(pt.u, pt.v).evaluate(pt.params);
      ruw = family.build(pt.u, pt.w).evaluate(pt.params);
      rvw = family.build(pt.v, pt.w).evaluate(pt.params);
    } catch (const PoleError&) {
      o.skipped = true;
      return o;
    }
    if (!family.excluded) {
      for (const auto* r : {&ruv, &ruw, &rvw}) {
        if (determinant(r->matrix()).is_zero()) {
          o.skipped = true;
          return o;
        }
      }
    }
    o.witness = nonzero_witness(colored_defect(ruv, ruw, rvw).matrix(), condition);
    if (o.witness) {
      o.witness->point = describe_point(pt.params);
      o.witness->point.emplace_back("u", format_ratio(pt.u));
      o.witness->point.emplace_back("v", format_ratio(pt.v));
      o.witness->point.emplace_back("w", format_ratio(pt.w));
    }
    return o;
  });
  merge_outcomes(report, outcomes);
  report.add_note("seed", std::to_string(options.seed));
  report.checks.push_back({condition, report.witness ? Status::fail : Status::pass});
  finish(report, start);
  return report;
}

VerificationReport verify_colored_family(const Algebra& A, const ParamScalar& p,
                                         const ParamScalar& q, Mode mode,
                                         const SampleOptions& options) {
  return verify_colored(colored_family(A, p, q), mode, options);
}

VerificationReport verify_wxz(const WxzTriple& t) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = Identity::wxz;
  report.mode = Mode::symbolic;
  const struct {
    const char* label;
    const Operator2* r;
    const Operator2* s;
    const Operator2* u;
  } conditions[] = {
      {"[W,W,W] = 0", &t.W, &t.W, &t.W},
      {"[Z,Z,Z] = 0", &t.Z, &t.Z, &t.Z},
      {"[W,X,X] = 0", &t.W, &t.X, &t.X},
      {"[X,X,Z] = 0", &t.X, &t.X, &t.Z},
  };
  for (const auto& c : conditions) {
    auto w = nonzero_witness(yb_commutator(*c.r, *c.s, *c.u).matrix(), c.label);
    report.checks.push_back({c.label, w ? Status::fail : Status::pass});
    if (w && !report.witness) report.witness = std::move(w);
  }
  finish(report, start);
  return report;
}

VerificationReport verify_inverse_pair(const Operator2& r, const Operator2& rinv) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = Identity::inverse_roundtrip;
  report.mode = Mode::symbolic;
  Operator2::check_same(r, rinv);
  const Operator2 id = Operator2::identity(r.dim());
  const struct {
    const char* label;
    Operator2 product;
  } conditions[] = {
      {"R ∘ Rinv = I", compose(r, rinv)},
      {"Rinv ∘ R = I", compose(rinv, r)},
  };
  for (const auto& c : conditions) {
    auto w = nonzero_witness((c.product - id).matrix(), c.label);
    report.checks.push_back({c.label, w ? Status::fail : Status::pass});
    if (w && !report.witness) report.witness = std::move(w);
  }
  finish(report, start);
  return report;
}

namespace {

template <class Build>
VerificationReport axiom_report(Identity identity, Build build) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = identity;
  report.mode = Mode::symbolic;
  try {
    build();
  } catch (const AxiomViolation& e) {
    Witness w;
    w.condition = to_string(e.axiom());
    w.indices = e.witness();
    report.witness = std::move(w);
    report.add_note("detail", e.what());
  }
  report.checks.push_back({identity == Identity::algebra_axioms ? "unit law and associativity"
                                                                : "grading, super antisymmetry and super Jacobi",
                           report.witness ? Status::fail : Status::pass});
  finish(report, start);
  return report;
}

}  // namespace

VerificationReport verify_algebra_axioms(std::size_t dim, const StructureTable& structure,
                                         const Coordinates& unit) {
  return axiom_report(Identity::algebra_axioms, [&] { (void)make_algebra(dim, structure, unit); });
}

VerificationReport verify_super_axioms(std::size_t dim, const std::vector<int>& degree,
                                       const StructureTable& bracket) {
  return axiom_report(Identity::super_axioms, [&] { (void)make_superalgebra(dim, degree, bracket); });
}

TensorToSpace random_admissible_map(const SplitSpace& space, SampleGrid& grid) {
  const std::size_t n = space.total_dim();
  TensorToSpace f(n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i : space.w_indices()) {
      for (std::size_t j : space.w_indices()) f(k, i * n + j) = ParamScalar(grid.next());
    }
  }
  return f;
}

VerificationReport verify_split_center_sampled(const SplitSpace& space,
                                               const SampleOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = Identity::qybe;
  report.mode = Mode::sampled;
  SampleGrid grid(options.seed);
  std::vector<std::pair<TensorToSpace, TensorToSpace>> pairs;
  for (std::size_t i = 0; i < options.count; ++i) {
    TensorToSpace f = random_admissible_map(space, grid);
    TensorToSpace g = random_admissible_map(space, grid);
    pairs.emplace_back(std::move(f), std::move(g));
  }
  const auto outcomes = evaluate_points(pairs.size(), options.threads, [&](std::size_t i) {
    SampleOutcome o;
    const Operator2 r = split_center_operator(space, pairs[i].first, pairs[i].second);
    o.witness = nonzero_witness(qybe_defect(r).matrix(), condition_of(Equation::qybe));
    if (o.witness) o.witness->point.emplace_back("sample", std::to_string(i));
    return o;
  });
  merge_outcomes(report, outcomes);
  report.add_note("seed", std::to_string(options.seed));
  report.add_note("dim", std::to_string(space.total_dim()));
  report.add_note("c index", std::to_string(space.c_index()));
  report.checks.push_back({condition_of(Equation::qybe), report.witness ? Status::fail : Status::pass});
  finish(report, start);
  return report;
}

VerificationReport compare_display(const Operator2& generated, const Matrix& display,
                                   DisplayConvention convention,
                                   const std::vector<std::string>& tensor_names) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = Identity::matrix_display;
  report.mode = Mode::symbolic;
  const std::size_t size = generated.size();
  if (display.rows() != size || display.cols() != size) {
    throw ShapeError("display matrix has the wrong size");
  }
  if (!tensor_names.empty() && tensor_names.size() != size) {
    throw ShapeError("tensor name count differs from matrix size");
  }
  const bool rows = convention == DisplayConvention::rows_are_images;
  for (std::size_t t = 0; t < size; ++t) {
    const std::string name = tensor_names.empty() ? "basis tensor " + std::to_string(t) : tensor_names[t];
    const std::string label = "image of " + name;
    std::optional<std::size_t> bad;
    for (std::size_t k = 0; k < size && !bad; ++k) {
      const ParamScalar& shown = rows ? display(t, k) : display(k, t);
      if (shown != generated(k, t)) bad = k;
    }
    report.checks.push_back({label, bad ? Status::fail : Status::pass});
    if (bad && !report.witness) {
      Witness w;
      w.condition = label;
      w.entry = rows ? std::make_pair(t, *bad) : std::make_pair(*bad, t);
      w.value = "displayed " + (rows ? display(t, *bad) : display(*bad, t)).to_string() +
                ", computed " + generated(*bad, t).to_string();
      report.witness = std::move(w);
    }
  }
  report.add_note("convention", rows ? "rows are images" : "columns are images");
  finish(report, start);
  return report;
}

}  // namespace ybx
