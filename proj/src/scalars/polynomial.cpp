#include "ybx/scalars/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ybx/errors.hpp"

namespace ybx {

namespace {

using Term = Polynomial::Term;
using Exponents = Polynomial::Exponents;
using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

const VarsPtr& empty_vars() {
  static const VarsPtr vars = std::make_shared<const std::vector<std::string>>();
  return vars;
}

std::uint64_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// <0, 0, >0 like strcmp, in graded lexicographic order.
int compare_grlex(const Exponents& a, const Exponents& b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) { return a == b || *a == *b; }

VarsPtr union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return std::make_shared<const std::vector<std::string>>(std::move(out));
}

std::vector<Term> remap(std::span<const Term> terms, const std::vector<std::string>& from,
                        const std::vector<std::string>& to) {
  std::vector<std::size_t> position(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    position[i] = static_cast<std::size_t>(
        std::lower_bound(to.begin(), to.end(), from[i]) - to.begin());
  }
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Exponents e(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) e[position[i]] = t.exps[i];
    out.push_back(Term{std::move(e), t.coef});
  }
  return out;
}

// a + sign * b, both sorted and over the same variables.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare_grlex(a[i].exps, b[j].exps);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coef = -out.back().coef;
      ++j;
    } else {
      Ratio sum = sign < 0 ? Ratio(a[i].coef - b[j].coef) : Ratio(a[i].coef + b[j].coef);
      if (sgn(sum) != 0) out.push_back(Term{a[i].exps, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coef = -out.back().coef;
  }
  return out;
}

std::vector<Term> times_term(std::span<const Term> terms, const Term& m) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Exponents e = t.exps;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exps[i];
    out.push_back(Term{std::move(e), t.coef * m.coef});
  }
  return out;
}

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_grlex(a.exps, b.exps) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  terms = std::move(out);
}

Ratio power(const Ratio& base, std::uint32_t exp) {
  Ratio result = 1;
  Ratio b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return result;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

std::string format_monomial(const std::vector<std::string>& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, const std::string& var) {
  return exact_divide(p, content_in(p, var)).monic();
}

Polynomial monomial_gcd(const Polynomial& monomial, const Polynomial& other) {
  const auto& mvars = monomial.variables();
  const auto& ovars = other.variables();
  const auto& mexps = monomial.terms().front().exps;
  std::vector<Term> result{Term{Exponents(mvars.size(), 0), Ratio(1)}};
  for (std::size_t i = 0; i < mvars.size(); ++i) {
    auto it = std::lower_bound(ovars.begin(), ovars.end(), mvars[i]);
    if (it == ovars.end() || *it != mvars[i]) continue;
    const auto k = static_cast<std::size_t>(it - ovars.begin());
    std::uint32_t low = mexps[i];
    for (const auto& t : other.terms()) low = std::min(low, t.exps[k]);
    result.front().exps[i] = low;
  }
  return Polynomial::from_terms(mvars, std::move(result));
}

Polynomial primitive_gcd_in(Polynomial a, Polynomial b, const std::string& var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b.monic();
    if (r.degree_in(var) == 0) return Polynomial(1);
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
}

}  // namespace

std::string format_ratio(const Ratio& r) { return r.get_str(); }

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(const Ratio& constant) : vars_(empty_vars()) {
  if (sgn(constant) != 0) terms_.push_back(Term{Exponents{}, constant});
}

Polynomial::Polynomial(long constant) : Polynomial(Ratio(constant)) {}

Polynomial::Polynomial(VarsPtr vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  trim_variables();
}

Polynomial Polynomial::variable(const std::string& name) {
  auto vars = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{name});
  return Polynomial(std::move(vars), {Term{Exponents{1}, Ratio(1)}});
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return vars[x] < vars[y]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vars[order[i]] == vars[order[i - 1]]) {
      throw std::invalid_argument("duplicate indeterminate '" + vars[order[i]] + "'");
    }
  }
  std::vector<std::string> sorted;
  sorted.reserve(vars.size());
  for (auto k : order) sorted.push_back(vars[k]);
  for (auto& t : terms) {
    if (t.exps.size() != vars.size()) throw std::invalid_argument("exponent vector size mismatch");
    Exponents e(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) e[i] = t.exps[order[i]];
    t.exps = std::move(e);
  }
  sort_and_combine(terms);
  return Polynomial(std::make_shared<const std::vector<std::string>>(std::move(sorted)),
                    std::move(terms));
}

void Polynomial::trim_variables() {
  if (terms_.empty()) {
    vars_ = empty_vars();
    return;
  }
  const auto& vars = *vars_;
  std::vector<bool> used(vars.size(), false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < vars.size(); ++i) used[i] = used[i] || t.exps[i] > 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (used[i]) kept.push_back(vars[i]);
  }
  for (auto& t : terms_) {
    Exponents e;
    e.reserve(kept.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (used[i]) e.push_back(t.exps[i]);
    }
    t.exps = std::move(e);
  }
  vars_ = kept.empty() ? empty_vars()
                       : std::make_shared<const std::vector<std::string>>(std::move(kept));
}

std::optional<Ratio> Polynomial::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Ratio(0) : terms_.front().coef;
}

Ratio Polynomial::leading_coefficient() const {
  return terms_.empty() ? Ratio(0) : terms_.front().coef;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : static_cast<std::uint32_t>(degree_of(terms_.front().exps));
}

std::uint32_t Polynomial::degree_in(std::string_view var) const {
  const auto& vars = *vars_;
  auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var) return 0;
  const auto k = static_cast<std::size_t>(it - vars.begin());
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[k]);
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coef == 1) return *this;
  Polynomial out = *this;
  const Ratio inv = 1 / terms_.front().coef;
  for (auto& t : out.terms_) t.coef *= inv;
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::string_view var) const {
  const auto& vars = *vars_;
  auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var) return {*this};
  const auto k = static_cast<std::size_t>(it - vars.begin());
  std::vector<std::vector<Term>> groups(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term copy = t;
    copy.exps[k] = 0;
    groups[t.exps[k]].push_back(std::move(copy));
  }
  std::vector<Polynomial> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back(Polynomial(vars_, std::move(g)));
  return out;
}

Polynomial Polynomial::leading_coefficient_in(std::string_view var) const {
  return coefficients_in(var).back();
}

Polynomial Polynomial::shifted(const std::string& var, std::uint32_t power) const {
  if (power == 0 || is_zero()) return *this;
  std::vector<std::string> one{var};
  VarsPtr vars = union_vars(*vars_, one);
  std::vector<Term> terms = remap(terms_, *vars_, *vars);
  const auto k = static_cast<std::size_t>(
      std::lower_bound(vars->begin(), vars->end(), var) - vars->begin());
  for (auto& t : terms) t.exps[k] += power;
  return Polynomial(std::move(vars), std::move(terms));
}

Ratio Polynomial::evaluate(const Assignment& point) const {
  const auto& vars = *vars_;
  std::vector<const Ratio*> values(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it == point.end()) throw IncompleteAssignment(vars[i]);
    values[i] = &it->second;
  }
  Ratio sum = 0;
  for (const auto& t : terms_) {
    Ratio term = t.coef;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.exps[i] > 0) term *= power(*values[i], t.exps[i]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (same_vars(vars_, other.vars_)) {
    terms_ = merge(terms_, other.terms_, +1);
  } else {
    VarsPtr vars = union_vars(*vars_, *other.vars_);
    terms_ = merge(remap(terms_, *vars_, *vars), remap(other.terms_, *other.vars_, *vars), +1);
    vars_ = std::move(vars);
  }
  trim_variables();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (same_vars(vars_, other.vars_)) {
    terms_ = merge(terms_, other.terms_, -1);
  } else {
    VarsPtr vars = union_vars(*vars_, *other.vars_);
    terms_ = merge(remap(terms_, *vars_, *vars), remap(other.terms_, *other.vars_, *vars), -1);
    vars_ = std::move(vars);
  }
  trim_variables();
  return *this;
}

Polynomial& Polynomial::operator*=(const Ratio& scale) {
  if (sgn(scale) == 0) return *this = Polynomial();
  for (auto& t : terms_) t.coef *= scale;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_constant()) return b * a.terms_.front().coef;
  if (b.is_constant()) return a * b.terms_.front().coef;
  VarsPtr vars;
  std::vector<Term> ta, tb;
  std::span<const Term> sa = a.terms_, sb = b.terms_;
  if (same_vars(a.vars_, b.vars_)) {
    vars = a.vars_;
  } else {
    vars = union_vars(*a.vars_, *b.vars_);
    ta = remap(a.terms_, *a.vars_, *vars);
    tb = remap(b.terms_, *b.vars_, *vars);
    sa = ta;
    sb = tb;
  }
  if (sa.size() > sb.size()) std::swap(sa, sb);
  std::vector<Term> out;
  if (sa.size() == 1) {
    out = times_term(sb, sa.front());
  } else {
    out.reserve(sa.size() * sb.size());
    for (const auto& x : sa) {
      for (const auto& y : sb) {
        Exponents e = x.exps;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += y.exps[i];
        out.push_back(Term{std::move(e), x.coef * y.coef});
      }
    }
    sort_and_combine(out);
  }
  return Polynomial(std::move(vars), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!same_vars(a.vars_, b.vars_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coef) < 0;
    const Ratio magnitude = abs(t.coef);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(*vars_, t.exps);
    if (mono.empty()) {
      out += format_ratio(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += format_ratio(magnitude) + '*' + mono;
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MalformedScalar("polynomial division by zero");
  if (a.is_zero()) return {Polynomial(), Polynomial()};
  if (b.is_constant()) return {a * (1 / b.leading_coefficient()), Polynomial()};

  const VarsPtr vars = union_vars(a.variables(), b.variables());
  std::vector<Term> p = remap(a.terms(), a.variables(), *vars);
  const std::vector<Term> d = remap(b.terms(), b.variables(), *vars);
  const Term& lead = d.front();
  std::vector<Term> quotient, remainder;
  while (!p.empty()) {
    const Term& top = p.front();
    if (divides(lead.exps, top.exps)) {
      Term t{top.exps, top.coef / lead.coef};
      for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] -= lead.exps[i];
      p = merge(p, times_term(d, t), -1);
      quotient.push_back(std::move(t));
    } else {
      remainder.push_back(top);
      p.erase(p.begin());
    }
  }
  return {Polynomial::from_terms(*vars, std::move(quotient)),
          Polynomial::from_terms(*vars, std::move(remainder))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant() && !b.is_zero()) return a * (1 / b.leading_coefficient());
  if (a == b) return Polynomial(1);
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) {
    throw std::logic_error("inexact polynomial division: (" + a.to_string() + ") / (" +
                           b.to_string() + ")");
  }
  return q;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var) {
  const std::uint32_t db = b.degree_in(var);
  const Polynomial lcb = b.leading_coefficient_in(var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const std::uint32_t dr = r.degree_in(var);
    const Polynomial lcr = r.leading_coefficient_in(var);
    r = r * lcb - (b * lcr).shifted(var, dr - db);
  }
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);

  // Recurse on the shared indeterminate of lowest degree.
  std::optional<std::string> var;
  std::uint32_t best = 0;
  for (const auto& v : a.variables()) {
    const auto db = b.degree_in(v);
    if (db == 0) continue;
    const auto d = std::max(a.degree_in(v), db);
    if (!var || d < best) {
      var = v;
      best = d;
    }
  }
  if (!var) return Polynomial(1);

  const Polynomial ca = content_in(a, *var);
  const Polynomial cb = content_in(b, *var);
  const Polynomial g = gcd(ca, cb);
  const Polynomial h = primitive_gcd_in(exact_divide(a, ca), exact_divide(b, cb), *var);
  return (g * h).monic();
}

}  // namespace ybx
