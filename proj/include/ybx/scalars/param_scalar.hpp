#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ybx/scalars/polynomial.hpp"

namespace ybx {

/// Element of the field Q(indeterminates): a reduced fraction of
/// polynomials.
///
/// Canonical form: numerator and denominator coprime, denominator monic in
/// graded-lex order, zero stored as 0/1. Two scalars compare equal exactly
/// when they are equal as rational functions.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(const Ratio& value) : num_(value), den_(1) {}  // NOLINT
  ParamScalar(long value) : num_(value), den_(1) {}          // NOLINT
  ParamScalar(int value) : ParamScalar(static_cast<long>(value)) {}  // NOLINT
  ParamScalar(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT

  static ParamScalar indeterminate(const std::string& name);
  /// Reduces num/den to canonical form; throws MalformedScalar when den is 0.
  static ParamScalar fraction(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  std::optional<Ratio> constant_value() const;
  std::set<std::string> indeterminates() const;

  ParamScalar reciprocal() const;

  /// Exact value at `point`; IncompleteAssignment for a missing name,
  /// PoleError when the denominator vanishes there.
  Ratio evaluate(const Assignment& point) const;
  /// Replaces the named indeterminates; others are kept. PoleError when
  /// the denominator becomes zero.
  ParamScalar substitute(const std::map<std::string, ParamScalar, std::less<>>& values) const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& other);
  ParamScalar& operator-=(const ParamScalar& other);
  ParamScalar& operator*=(const ParamScalar& other);
  ParamScalar& operator/=(const ParamScalar& other);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  /// Text form accepted by parse_scalar; see docs/formats.md.
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

using Substitution = std::map<std::string, ParamScalar, std::less<>>;

/// Canonical form of num/den (same as ParamScalar::fraction).
ParamScalar normalize(const Polynomial& num, const Polynomial& den);

/// Parses the scalar grammar: integers, decimals, identifiers, + - * / ^
/// and parentheses. Throws ParseError or MalformedScalar (division by an
/// expression that is identically zero).
ParamScalar parse_scalar(std::string_view text);

}  // namespace ybx
