#include "ybx/cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ybx/io/json_io.hpp"
#include "ybx/verify/verify.hpp"

namespace ybx::cli {

namespace {

const char* const kParameters[] = {"alpha", "beta", "gamma", "p", "q", "u", "v",
                                   "lambda", "mu", "m", "n", "sigma"};

struct Config {
  std::string algebra;
  std::string superalgebra;
  std::string operator_path;
  std::string f_path;
  std::string g_path;
  std::string family = "colored";
  std::string equation = "braid";
  std::map<std::string, std::string> bindings;
  std::size_t z_index = 0;
  int eta = 0;
  std::size_t dim = 3;
  std::optional<std::size_t> c_index;
  bool symbolic = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string format = "text";
  std::string out;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

ParamScalar param(const Config& cfg, const std::string& name) {
  auto it = cfg.bindings.find(name);
  if (it == cfg.bindings.end() || it->second.empty()) return ParamScalar::indeterminate(name);
  try {
    return parse_scalar(it->second);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Substitution algebra_bindings(const Config& cfg) {
  Substitution values;
  for (const char* name : {"m", "n", "sigma"}) {
    auto it = cfg.bindings.find(name);
    if (it != cfg.bindings.end() && !it->second.empty()) values.emplace(name, param(cfg, name));
  }
  return values;
}

Algebra load_algebra_option(const Config& cfg) {
  if (cfg.algebra.empty()) return quadratic_quotient_algebra(param(cfg, "m"), param(cfg, "n"));
  Algebra a = load_algebra(cfg.algebra);
  const Substitution values = algebra_bindings(cfg);
  return values.empty() ? a : a.substitute(values);
}

LieSuperalgebra load_superalgebra_option(const Config& cfg) {
  if (cfg.superalgebra.empty()) throw UsageError("--superalgebra is required");
  return load_superalgebra(cfg.superalgebra);
}

Coordinates center_element(const LieSuperalgebra& L, std::size_t index) {
  const auto center = even_center(L);
  if (index >= center.size()) {
    throw UsageError("--z-index " + std::to_string(index) + " out of range: the even center has dimension " +
                     std::to_string(center.size()));
  }
  return center[index];
}

std::string format_coordinates(const Coordinates& z, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += z[i].is_one() ? labels[i] : "(" + z[i].to_string() + ")*" + labels[i];
  }
  return out.empty() ? "0" : out;
}

Mode mode_of(const Config& cfg) {
  return cfg.samples && !cfg.symbolic ? Mode::sampled : Mode::symbolic;
}

SampleOptions sample_options(const Config& cfg) {
  SampleOptions o;
  if (cfg.samples) o.count = *cfg.samples;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  return o;
}

VerificationReport braid_report(const Operator2& r, Equation which, const Config& cfg) {
  return mode_of(cfg) == Mode::sampled ? verify_constant_sampled(r, which, sample_options(cfg))
                                       : verify_constant(r, which);
}

// Invertibility by exact elimination, for operators without a closed-form
// inverse.
VerificationReport invertibility_report(const Operator2& r) {
  const OperatorInversion inv = inverse(r);
  if (inv.invertible()) return verify_inverse_pair(r, *inv.inverse);
  VerificationReport report;
  report.identity = Identity::inverse_roundtrip;
  report.status = Status::fail;
  report.checks.push_back({"R is invertible", Status::fail});
  Witness w;
  w.condition = "det R";
  w.value = inv.determinant.to_string();
  report.witness = std::move(w);
  return report;
}

struct Outcome {
  std::string command;
  std::vector<VerificationReport> reports;
};

Outcome check_constant(const Config& cfg) {
  Outcome o{"check constant", {}};
  if (!cfg.operator_path.empty()) {
    const Operator2 r = load_operator(cfg.operator_path);
    const Equation which = cfg.equation == "qybe" ? Equation::qybe : Equation::braid;
    o.reports.push_back(braid_report(r, which, cfg));
    o.reports.push_back(invertibility_report(r));
    return o;
  }
  const Algebra A = load_algebra_option(cfg);
  const ParamScalar alpha = param(cfg, "alpha"), beta = param(cfg, "beta"), gamma = param(cfg, "gamma");
  const Operator2 r = dn_operator(A, alpha, beta, gamma);
  const DnCase c = classify_dn_generic(alpha, beta, gamma);
  VerificationReport braid = braid_report(r, Equation::braid, cfg);
  braid.add_note("case", to_string(c));
  o.reports.push_back(std::move(braid));
  if (c != DnCase::none) {
    VerificationReport inv = verify_inverse_pair(r, dn_inverse(A, alpha, beta, gamma));
    inv.add_note("inverse", c == DnCase::iii ? "R_{0,0,1/gamma}" : "R_{1/beta,1/alpha,1/gamma}");
    o.reports.push_back(std::move(inv));
  } else {
    o.reports.push_back(invertibility_report(r));
  }
  return o;
}

Outcome check_colored(const Config& cfg) {
  Outcome o{"check colored", {}};
  const Algebra A = load_algebra_option(cfg);
  const ParamScalar p = param(cfg, "p"), q = param(cfg, "q");
  o.reports.push_back(verify_colored_family(A, p, q, mode_of(cfg), sample_options(cfg)));
  if (mode_of(cfg) == Mode::symbolic) {
    const ParamScalar u = param(cfg, "u"), v = param(cfg, "v");
    try {
      o.reports.push_back(verify_inverse_pair(colored_operator(A, p, q, u, v),
                                              colored_inverse(A, p, q, u, v)));
    } catch (const InvertibilityLocus& e) {
      o.reports.front().add_note("inverse", std::string("not checked: ") + e.what());
    }
  }
  return o;
}

Outcome check_wxz(const Config& cfg) {
  Outcome o{"check wxz", {}};
  const Algebra A = load_algebra_option(cfg);
  VerificationReport r = verify_wxz(wxz_system(A, param(cfg, "lambda"), param(cfg, "mu")));
  if (mode_of(cfg) == Mode::sampled) r.add_note("mode", "sampling not supported, checked symbolically");
  o.reports.push_back(std::move(r));
  return o;
}

Outcome check_super(const Config& cfg) {
  Outcome o{"check super", {}};
  const LieSuperalgebra L = load_superalgebra_option(cfg);
  const Coordinates z = center_element(L, cfg.z_index);
  const ParamScalar alpha = param(cfg, "alpha");
  const Operator2 phi = super_phi(L, z, alpha);
  VerificationReport braid = braid_report(phi, Equation::braid, cfg);
  braid.add_note("z", format_coordinates(z, L.labels()));
  o.reports.push_back(std::move(braid));
  o.reports.push_back(verify_inverse_pair(phi, super_phi_inverse(L, z, alpha)));
  return o;
}

Outcome check_split_center(const Config& cfg) {
  Outcome o{"check split-center", {}};
  if (!cfg.f_path.empty() || !cfg.g_path.empty()) {
    if (cfg.f_path.empty() || cfg.g_path.empty()) throw UsageError("--f and --g must be given together");
    const Operator2 f = load_operator(cfg.f_path);
    const Operator2 g = load_operator(cfg.g_path);
    const SplitSpace space(f.dim(), cfg.c_index.value_or(f.dim() - 1));
    o.reports.push_back(verify_constant(split_center_operator(space, f, g), Equation::qybe));
    return o;
  }
  if (cfg.dim < 2) throw UsageError("--dim must be at least 2");
  const SplitSpace space(cfg.dim, cfg.c_index.value_or(cfg.dim - 1));
  SampleOptions options = sample_options(cfg);
  if (!cfg.samples) options.count = 100;
  o.reports.push_back(verify_split_center_sampled(space, options));
  return o;
}

struct FamilyOperator {
  Operator2 op;
  std::vector<std::string> basis;
};

FamilyOperator build_family(const Config& cfg) {
  const std::string& f = cfg.family;
  if (f == "super-phi" || f == "super-phi-inverse" || f == "graded-twist") {
    const LieSuperalgebra L = load_superalgebra_option(cfg);
    if (f == "graded-twist") return {graded_twist(L), L.labels()};
    const Coordinates z = center_element(L, cfg.z_index);
    const ParamScalar alpha = param(cfg, "alpha");
    return {f == "super-phi" ? super_phi(L, z, alpha) : super_phi_inverse(L, z, alpha), L.labels()};
  }
  if (f == "normal-form") {
    if (cfg.eta != 0 && cfg.eta != 1) throw UsageError("--eta must be 0 or 1");
    return {normal_form_solution(param(cfg, "q"), cfg.eta), {"e0", "e1"}};
  }
  const Algebra A = load_algebra_option(cfg);
  if (f == "dn") return {dn_operator(A, param(cfg, "alpha"), param(cfg, "beta"), param(cfg, "gamma")), A.labels()};
  if (f == "dn-inverse") {
    return {dn_inverse(A, param(cfg, "alpha"), param(cfg, "beta"), param(cfg, "gamma")), A.labels()};
  }
  if (f == "colored" || f == "colored-inverse") {
    const ParamScalar p = param(cfg, "p"), q = param(cfg, "q"), u = param(cfg, "u"), v = param(cfg, "v");
    return {f == "colored" ? colored_operator(A, p, q, u, v) : colored_inverse(A, p, q, u, v), A.labels()};
  }
  if (f == "w" || f == "x" || f == "z") {
    WxzTriple t = wxz_system(A, param(cfg, "lambda"), param(cfg, "mu"));
    return {f == "w" ? t.W : f == "x" ? t.X : t.Z, A.labels()};
  }
  if (f == "twist") return {twist(A.dim()), A.labels()};
  throw UsageError("unknown family '" + f + "'");
}

std::string render_operator(const FamilyOperator& fo, const Config& cfg) {
  if (cfg.format == "json") return to_json(fo.op).dump(2) + "\n";
  return format_matrix(fo.op.matrix(), tensor_labels(fo.basis));
}

std::string render(const Outcome& o, const Config& cfg) {
  const bool pass = std::all_of(o.reports.begin(), o.reports.end(),
                                [](const VerificationReport& r) { return r.passed(); });
  if (cfg.format == "json") {
    Json doc;
    doc["format"] = "ybx.run.v1";
    doc["command"] = o.command;
    Json reports = Json::array();
    for (const auto& r : o.reports) reports.push_back(to_json(r));
    doc["reports"] = std::move(reports);
    doc["status"] = pass ? "pass" : "fail";
    return doc.dump(2) + "\n";
  }
  std::string text;
  for (const auto& r : o.reports) text += to_text(r);
  text += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
  return text;
}

void emit(const std::string& text, const Config& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw FileError("cannot write " + cfg.out);
  file << text;
}

int outcome_status(const Outcome& o) {
  for (const auto& r : o.reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

void add_parameters(CLI::App* app, Config& cfg) {
  for (const char* name : kParameters) {
    app->add_option(std::string("--") + name, cfg.bindings[name], std::string("value of ") + name + " (scalar expression)");
  }
}

void add_output(CLI::App* app, Config& cfg) {
  app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--out", cfg.out, "write output to a file");
}

void add_sampling(CLI::App* app, Config& cfg) {
  app->add_flag("--symbolic", cfg.symbolic, "verify symbolically (default)");
  app->add_option("--samples", cfg.samples, "verify at N seeded sample points");
  app->add_option("--seed", cfg.seed, "sampling seed");
  app->add_option("--threads", cfg.threads, "sampling worker threads (0 = all cores)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  for (const char* name : kParameters) cfg.bindings[name];

  CLI::App app{"Exact Yang-Baxter operator workbench", "ybx"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "verify an identity");
  check->require_subcommand(1);
  struct CheckCommand {
    const char* name;
    const char* description;
    Outcome (*fn)(const Config&);
  };
  const CheckCommand checks[] = {
      {"constant", "braid relation of the constant family over an algebra", check_constant},
      {"colored", "colored relation of the spectral family", check_colored},
      {"wxz", "the four conditions on the W, X, Z triple", check_wxz},
      {"super", "braid relation of the superalgebra operator", check_super},
      {"split-center", "quantum relation for maps through a split center", check_split_center},
  };
  for (const auto& [name, description, fn] : checks) {
    auto* sub = check->add_subcommand(name, description);
    add_parameters(sub, cfg);
    add_output(sub, cfg);
    add_sampling(sub, cfg);
    sub->add_option("--algebra", cfg.algebra, "algebra JSON file");
    sub->add_option("--superalgebra", cfg.superalgebra, "superalgebra JSON file");
    sub->add_option("--z-index", cfg.z_index, "index into the even-center basis");
    sub->add_option("--operator", cfg.operator_path, "operator JSON file (constant)");
    sub->add_option("--equation", cfg.equation, "braid or qybe (with --operator)")
        ->check(CLI::IsMember({"braid", "qybe"}));
    sub->add_option("--dim", cfg.dim, "dimension of V (split-center)");
    sub->add_option("--c-index", cfg.c_index, "basis index of c (split-center)");
    sub->add_option("--f", cfg.f_path, "operator JSON file for f (split-center)");
    sub->add_option("--g", cfg.g_path, "operator JSON file for g (split-center)");
    sub->callback([&, fn = fn] {
      action = [&, fn] {
        const Outcome o = fn(cfg);
        emit(render(o, cfg), cfg, out);
        return outcome_status(o);
      };
    });
  }

  auto* exp = app.add_subcommand("export", "export an operator");
  exp->require_subcommand(1);
  auto* matrix = exp->add_subcommand("matrix", "operator matrix of a family");
  auto* invert = app.add_subcommand("invert", "exact inverse of an operator");
  for (auto* sub : {matrix, invert}) {
    add_parameters(sub, cfg);
    add_output(sub, cfg);
    sub->add_option("--family", cfg.family,
                    "dn, dn-inverse, colored, colored-inverse, w, x, z, twist, normal-form, "
                    "super-phi, super-phi-inverse, graded-twist");
    sub->add_option("--algebra", cfg.algebra, "algebra JSON file");
    sub->add_option("--superalgebra", cfg.superalgebra, "superalgebra JSON file");
    sub->add_option("--z-index", cfg.z_index, "index into the even-center basis");
    sub->add_option("--eta", cfg.eta, "normal-form parameter, 0 or 1");
    sub->add_flag("--symbolic", cfg.symbolic, "keep unbound parameters as indeterminates (default)");
  }
  invert->add_option("--operator", cfg.operator_path, "operator JSON file");
  matrix->callback([&] {
    action = [&] {
      emit(render_operator(build_family(cfg), cfg), cfg, out);
      return 0;
    };
  });
  invert->callback([&] {
    action = [&] {
      FamilyOperator fo;
      if (!cfg.operator_path.empty()) {
        fo.op = load_operator(cfg.operator_path);
        for (std::size_t i = 0; i < fo.op.dim(); ++i) fo.basis.push_back("e" + std::to_string(i));
      } else {
        fo = build_family(cfg);
      }
      const OperatorInversion inv = inverse(fo.op);
      if (!inv.invertible()) {
        err << "ybx: operator is not invertible (det = " << inv.determinant.to_string() << ")\n";
        return 1;
      }
      fo.op = *inv.inverse;
      emit(render_operator(fo, cfg), cfg, out);
      return 0;
    };
  });

  auto* validate = app.add_subcommand("validate", "check the axioms of a structure table");
  validate->require_subcommand(1);
  auto* v_alg = validate->add_subcommand("algebra", "unit law and associativity");
  auto* v_sup = validate->add_subcommand("superalgebra", "grading, super antisymmetry, super Jacobi");
  std::string validate_path;
  for (auto* sub : {v_alg, v_sup}) {
    add_output(sub, cfg);
    sub->add_option("path", validate_path, "JSON file");
  }
  v_alg->add_option("--algebra", cfg.algebra, "algebra JSON file");
  v_sup->add_option("--superalgebra", cfg.superalgebra, "superalgebra JSON file");
  v_alg->callback([&] {
    action = [&] {
      const std::string path = validate_path.empty() ? cfg.algebra : validate_path;
      if (path.empty()) throw UsageError("no algebra file given");
      AlgebraTable t = algebra_table_from_json(read_json_file(path));
      Outcome o{"validate algebra", {verify_algebra_axioms(t.dim, t.structure, t.unit)}};
      emit(render(o, cfg), cfg, out);
      return outcome_status(o);
    };
  });
  v_sup->callback([&] {
    action = [&] {
      const std::string path = validate_path.empty() ? cfg.superalgebra : validate_path;
      if (path.empty()) throw UsageError("no superalgebra file given");
      SuperalgebraTable t = superalgebra_table_from_json(read_json_file(path));
      Outcome o{"validate superalgebra", {verify_super_axioms(t.dim, t.degree, t.bracket)}};
      emit(render(o, cfg), cfg, out);
      return outcome_status(o);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "ybx: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ybx::cli
