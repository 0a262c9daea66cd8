#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ybx {

/// Exact rational number in canonical form (positive denominator, coprime).
using Ratio = mpq_class;

/// Point of evaluation: indeterminate name to value.
using Assignment = std::map<std::string, Ratio, std::less<>>;

std::string format_ratio(const Ratio& r);

/// Sparse multivariate polynomial over the rationals.
///
/// Indeterminates are kept in a sorted name list shared between copies;
/// every listed name occurs with positive exponent in some term. Terms are
/// stored in strictly decreasing graded-lexicographic order (total degree
/// first, ties broken lexicographically with the alphabetically first name
/// most significant), so two equal polynomials have identical storage.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Term {
    Exponents exps;
    Ratio coef;
  };

  Polynomial();
  Polynomial(const Ratio& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant);          // NOLINT(google-explicit-constructor)

  static Polynomial variable(const std::string& name);
  /// Builds from unsorted terms over `vars`; combines duplicates, drops
  /// zero coefficients and unused names.
  static Polynomial from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return vars_->empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::optional<Ratio> constant_value() const;

  const std::vector<std::string>& variables() const noexcept { return *vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of the grlex-leading term; zero for the zero polynomial.
  Ratio leading_coefficient() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::string_view var) const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Coefficients of this polynomial viewed as univariate in `var`,
  /// indexed by degree.
  std::vector<Polynomial> coefficients_in(std::string_view var) const;
  Polynomial leading_coefficient_in(std::string_view var) const;
  /// this * var^power
  Polynomial shifted(const std::string& var, std::uint32_t power) const;

  Ratio evaluate(const Assignment& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Ratio& scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Ratio& s) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Polynomial(std::shared_ptr<const std::vector<std::string>> vars, std::vector<Term> terms);

  void trim_variables();

  std::shared_ptr<const std::vector<std::string>> vars_;
  std::vector<Term> terms_;
};

/// Divides `a` by `b`, returning (quotient, remainder) from the grlex
/// division algorithm. The remainder is zero iff `b` divides `a`.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

/// Quotient of an exact division; throws std::logic_error when `b` does not
/// divide `a`.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of `a` by `b` as univariate polynomials in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& var);

/// Greatest common divisor, normalized to be monic. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace ybx
