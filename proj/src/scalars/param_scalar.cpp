#include "ybx/scalars/param_scalar.hpp"

#include "ybx/errors.hpp"

namespace ybx {

namespace {

ParamScalar power(const ParamScalar& base, std::uint32_t exp) {
  ParamScalar result = 1;
  ParamScalar b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return result;
}

ParamScalar substitute_polynomial(const Polynomial& p, const Substitution& values) {
  const auto& vars = p.variables();
  std::vector<const ParamScalar*> replacement(vars.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = values.find(vars[i]);
    if (it != values.end()) {
      replacement[i] = &it->second;
      any = true;
    }
  }
  if (!any) return ParamScalar(p);
  ParamScalar sum;
  for (const auto& t : p.terms()) {
    Polynomial::Exponents kept(t.exps.size(), 0);
    ParamScalar factor = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (replacement[i] != nullptr) {
        factor *= power(*replacement[i], t.exps[i]);
      } else {
        kept[i] = t.exps[i];
      }
    }
    sum += factor * ParamScalar(Polynomial::from_terms(vars, {Polynomial::Term{kept, t.coef}}));
  }
  return sum;
}

}  // namespace

ParamScalar ParamScalar::indeterminate(const std::string& name) {
  return ParamScalar(Polynomial::variable(name));
}

ParamScalar ParamScalar::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw MalformedScalar("zero denominator");
  ParamScalar out;
  if (num.is_zero()) return out;
  if (den.is_constant()) {
    out.num_ = num * (1 / den.leading_coefficient());
    return out;
  }
  const Polynomial g = gcd(num, den);
  Polynomial n = exact_divide(num, g);
  Polynomial d = exact_divide(den, g);
  const Ratio lead = d.leading_coefficient();
  if (lead != 1) {
    n *= 1 / lead;
    d *= 1 / lead;
  }
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

ParamScalar normalize(const Polynomial& num, const Polynomial& den) {
  return ParamScalar::fraction(num, den);
}

bool ParamScalar::is_one() const {
  auto v = constant_value();
  return v && *v == 1;
}

std::optional<Ratio> ParamScalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return *num_.constant_value();
}

std::set<std::string> ParamScalar::indeterminates() const {
  std::set<std::string> out(num_.variables().begin(), num_.variables().end());
  out.insert(den_.variables().begin(), den_.variables().end());
  return out;
}

ParamScalar ParamScalar::reciprocal() const {
  if (is_zero()) throw MalformedScalar("reciprocal of zero");
  return fraction(den_, num_);
}

Ratio ParamScalar::evaluate(const Assignment& point) const {
  const Ratio d = den_.evaluate(point);
  const Ratio n = num_.evaluate(point);
  if (sgn(d) == 0) throw PoleError("denominator " + den_.to_string() + " vanishes at the point");
  return n / d;
}

ParamScalar ParamScalar::substitute(const Substitution& values) const {
  const ParamScalar d = substitute_polynomial(den_, values);
  if (d.is_zero()) {
    throw PoleError("denominator " + den_.to_string() + " vanishes under substitution");
  }
  return substitute_polynomial(num_, values) / d;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    if (den_.is_constant()) {
      num_ += other.num_;
      return *this;
    }
    return *this = fraction(num_ + other.num_, den_);
  }
  // Over the lcm of the denominators.
  const Polynomial g = gcd(den_, other.den_);
  const Polynomial a = exact_divide(den_, g);
  const Polynomial b = exact_divide(other.den_, g);
  return *this = fraction(num_ * b + other.num_ * a, a * other.den_);
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& other) { return *this += -other; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = ParamScalar();
  if (den_.is_constant() && other.den_.is_constant()) {
    num_ = num_ * other.num_;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  const Polynomial g1 = gcd(num_, other.den_);
  const Polynomial g2 = gcd(other.num_, den_);
  Polynomial n = exact_divide(num_, g1) * exact_divide(other.num_, g2);
  Polynomial d = exact_divide(den_, g2) * exact_divide(other.den_, g1);
  const Ratio lead = d.leading_coefficient();
  if (lead != 1) {
    n *= 1 / lead;
    d *= 1 / lead;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& other) {
  if (other.is_zero()) throw MalformedScalar("division by zero");
  return *this *= other.reciprocal();
}

std::string ParamScalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  const auto nc = num_.constant_value();
  const bool bare_num = num_.term_count() == 1 && (!nc || mpz_cmp_ui(nc->get_den_mpz_t(), 1) == 0);
  if (!bare_num) n = "(" + n + ")";
  std::string d = den_.to_string();
  const bool bare_den = den_.term_count() == 1 && den_.variables().size() == 1;
  if (!bare_den) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace ybx
