#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "ybx/errors.hpp"
#include "ybx/scalars/param_scalar.hpp"

namespace {

using ybx::Assignment;
using ybx::ParamScalar;
using ybx::Polynomial;
using ybx::Ratio;

ParamScalar var(const char* name) { return ParamScalar::indeterminate(name); }
Polynomial pvar(const char* name) { return Polynomial::variable(name); }

Polynomial random_polynomial(oracle::Rng& rng) {
  static const char* const names[] = {"x", "y", "z"};
  Polynomial out;
  const long terms = rng.range(0, 3);
  for (long t = 0; t < terms; ++t) {
    Polynomial mono(rng.range(-4, 4));
    const long degree = rng.range(0, 2);
    for (long d = 0; d < degree; ++d) mono *= pvar(names[rng.range(0, 2)]);
    out += mono;
  }
  return out;
}

ParamScalar random_scalar(oracle::Rng& rng) {
  Polynomial den;
  do {
    den = random_polynomial(rng);
  } while (den.is_zero());
  return ParamScalar::fraction(random_polynomial(rng), den);
}

Assignment random_point(oracle::Rng& rng) {
  return {{"x", rng.ratio()}, {"y", rng.ratio()}, {"z", rng.ratio()}};
}

TEST(Ratio, CanonicalForm) {
  Ratio r(6, -4);
  r.canonicalize();
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(ybx::format_ratio(r), "-3/2");
  EXPECT_EQ(ybx::format_ratio(Ratio(4)), "4");
}

TEST(Normalize, CancelsCommonFactor) {
  const Polynomial x = pvar("x");
  const ParamScalar s = ybx::normalize(2 * x, 4 * x * x);
  EXPECT_EQ(s, ParamScalar(Ratio(1, 2)) / var("x"));
  EXPECT_EQ(s.denominator(), x);
}

TEST(Normalize, IdentityQuotient) {
  const Polynomial d = pvar("u") - pvar("v");
  EXPECT_TRUE(ybx::normalize(d, d).is_one());
}

TEST(Normalize, UniqueZero) {
  const ParamScalar s = var("p") * var("u") - var("q") * var("v");
  const ParamScalar z = s - s;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, ParamScalar());
  EXPECT_EQ(z.denominator(), Polynomial(1));
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Normalize, ZeroDenominatorIsMalformed) {
  EXPECT_THROW(ybx::normalize(pvar("x"), Polynomial()), ybx::MalformedScalar);
  EXPECT_THROW(var("x") / ParamScalar(0), ybx::MalformedScalar);
}

TEST(Normalize, DenominatorIsMonic) {
  const ParamScalar s = ybx::normalize(pvar("x"), 3 * pvar("y") + 6);
  EXPECT_EQ(s.denominator().leading_coefficient(), 1);
  EXPECT_EQ(s * (3 * var("y") + 6), var("x"));
}

TEST(Evaluate, DirectSubstitution) {
  const ParamScalar s = var("p") * (var("u") - var("v"));
  EXPECT_EQ(s.evaluate({{"p", 2}, {"u", 3}, {"v", 1}}), 4);
}

TEST(Evaluate, PoleOnExcludedLocus) {
  const ParamScalar s = (var("p") * var("u") - var("q") * var("v")).reciprocal();
  EXPECT_THROW(s.evaluate({{"p", 1}, {"q", 1}, {"u", 2}, {"v", 2}}), ybx::PoleError);
}

TEST(Evaluate, MissingIndeterminate) {
  const ParamScalar s = var("p") + var("q");
  try {
    s.evaluate({{"p", 1}});
    FAIL() << "expected IncompleteAssignment";
  } catch (const ybx::IncompleteAssignment& e) {
    EXPECT_EQ(e.name(), "q");
  }
}

// Matrix of the colored operator on k[X]/(X^2 - sigma), written out by hand.
oracle::QMatrix sigma_matrix(const Assignment& a) {
  const Ratio p = a.at("p"), q = a.at("q"), u = a.at("u"), v = a.at("v"), s = a.at("sigma");
  return {{q * u - p * v, 0, 0, s * (q + p) * (u - v)},
          {0, p * (u - v), (q - p) * v, 0},
          {0, (q - p) * u, q * (u - v), 0},
          {0, 0, 0, q * v - p * u}};
}

TEST(Evaluate, DeterminantFactorMatchesLeibniz) {
  const ParamScalar factor = -((var("q") * var("u") - var("p") * var("v")) *
                               (var("q") * var("u") - var("p") * var("v")) *
                               (var("p") * var("u") - var("q") * var("v")) *
                               (var("p") * var("u") - var("q") * var("v")));
  const Assignment degenerate{{"q", 1}, {"p", 0}, {"u", 1}, {"v", 0}, {"sigma", 1}};
  EXPECT_EQ(oracle::leibniz_det(sigma_matrix(degenerate)), 0);
  EXPECT_EQ(factor.evaluate(degenerate), 0);
  const Assignment generic{{"p", 2}, {"q", 3}, {"u", 5}, {"v", 7}, {"sigma", 11}};
  EXPECT_EQ(oracle::leibniz_det(sigma_matrix(generic)), -121);
  EXPECT_EQ(factor.evaluate(generic), -121);
}

TEST(FieldAxioms, RandomScalars) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const ParamScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * ParamScalar(1), a);
    EXPECT_EQ(a + ParamScalar(0), a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.reciprocal()).is_one());
      EXPECT_EQ(b / a * a, b);
    }
  }
}

TEST(Evaluate, IsRingHomomorphism) {
  oracle::Rng rng(12);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ParamScalar a = random_scalar(rng), b = random_scalar(rng);
    const Assignment point = random_point(rng);
    Ratio av, bv;
    try {
      av = a.evaluate(point);
      bv = b.evaluate(point);
    } catch (const ybx::PoleError&) {
      continue;
    }
    EXPECT_EQ((a + b).evaluate(point), av + bv);
    EXPECT_EQ((a * b).evaluate(point), av * bv);
    EXPECT_EQ((a - b).evaluate(point), av - bv);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Normalize, IdempotentAndEqualityRespecting) {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const ParamScalar a = random_scalar(rng);
    EXPECT_EQ(ybx::normalize(a.numerator(), a.denominator()), a);
    const Polynomial k = random_polynomial(rng) + 1;
    if (k.is_zero()) continue;
    const ParamScalar scaled = ybx::normalize(a.numerator() * k, a.denominator() * k);
    EXPECT_EQ(scaled, a);
    EXPECT_TRUE((scaled - a).is_zero());
  }
}

TEST(Parse, RoundTripsRandomScalars) {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const ParamScalar a = random_scalar(rng);
    EXPECT_EQ(ybx::parse_scalar(a.to_string()), a) << a.to_string();
  }
}

TEST(Parse, CanonicalText) {
  EXPECT_EQ(ybx::parse_scalar("q*v - 2*u*p").to_string(), "-2*p*u + q*v");
  EXPECT_EQ(ybx::parse_scalar("x*x").to_string(), "x^2");
  EXPECT_EQ(ybx::parse_scalar("3/6").to_string(), "1/2");
  EXPECT_EQ(ybx::parse_scalar("0.25"), ParamScalar(Ratio(1, 4)));
  EXPECT_EQ(ybx::parse_scalar("-x^-1"), -var("x").reciprocal());
  EXPECT_TRUE(ybx::parse_scalar("(a+b)/(b+a)").is_one());
  EXPECT_EQ(ybx::parse_scalar("sigma*(q+p)*(u-v)"),
            var("sigma") * (var("q") + var("p")) * (var("u") - var("v")));
}

TEST(Parse, Errors) {
  EXPECT_THROW(ybx::parse_scalar("2*"), ybx::ParseError);
  EXPECT_THROW(ybx::parse_scalar("(x"), ybx::ParseError);
  EXPECT_THROW(ybx::parse_scalar("x $ y"), ybx::ParseError);
  EXPECT_THROW(ybx::parse_scalar(""), ybx::ParseError);
  EXPECT_THROW(ybx::parse_scalar("1/0"), ybx::MalformedScalar);
  EXPECT_THROW(ybx::parse_scalar("1/(x-x)"), ybx::MalformedScalar);
  try {
    ybx::parse_scalar("x + * y");
    FAIL();
  } catch (const ybx::ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Gcd, DividesBothAndContainsCommonFactor) {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_polynomial(rng), b = random_polynomial(rng);
    const Polynomial c = random_polynomial(rng);
    if (c.is_zero() || (a.is_zero() && b.is_zero())) continue;
    const Polynomial g = ybx::gcd(a * c, b * c);
    ASSERT_FALSE(g.is_zero());
    EXPECT_EQ(g.leading_coefficient(), 1);
    EXPECT_NO_THROW(ybx::exact_divide(a * c, g));
    EXPECT_NO_THROW(ybx::exact_divide(b * c, g));
    EXPECT_NO_THROW(ybx::exact_divide(g, c.monic()));
  }
}

TEST(Polynomial, GradedLexOrder) {
  const Polynomial p = pvar("y") + pvar("x") * pvar("x") + pvar("x") * pvar("y") + 1;
  EXPECT_EQ(p.to_string(), "x^2 + x*y + y + 1");
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_EQ(p.degree_in("y"), 1u);
}

TEST(Polynomial, DivisionAlgorithm) {
  const Polynomial x = pvar("x"), y = pvar("y");
  const Polynomial a = x * x * y + x * y * y + y * y;
  const Polynomial b = x * y - 1;
  const auto [q, r] = ybx::divide(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_THROW(ybx::exact_divide(x + 1, x), std::logic_error);
}

}  // namespace
