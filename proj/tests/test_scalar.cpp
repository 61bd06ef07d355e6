#include <gtest/gtest.h>

#include "sqf/errors.hpp"
#include "sqf/scalar.hpp"
#include "test_util.hpp"

using namespace sqf;
using namespace sqf::testing;

TEST(Rational, CanonicalForm) {
  Rational r = parse_rational("6/-4");
  EXPECT_EQ(r.get_str(), "-3/2");
  EXPECT_EQ(parse_rational("0/7").get_str(), "0");
  EXPECT_GT(r.get_den(), 0);
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Scalar, Arithmetic) {
  EXPECT_EQ(S("1/2") + S("1/2"), Scalar(1));
  EXPECT_EQ(S("(p+1)*(p-1)"), S("p^2-1"));
  EXPECT_EQ(evaluate(S("(p^2-1)/p"), {{"p", Q("1/2")}}), Q("-3/2"));
  EXPECT_EQ(scalar_arith(S("p"), S("q"), ArithOp::kSub), S("p-q"));
  EXPECT_EQ(scalar_arith(S("p"), S("p"), ArithOp::kDiv), Scalar(1));
  EXPECT_THROW(scalar_arith(S("p"), Scalar(), ArithOp::kDiv), DivisionByZero);
  EXPECT_THROW(S("1/(p-p)"), DivisionByZero);
}

TEST(Scalar, Evaluate) {
  EXPECT_EQ(evaluate(S("q+1"), {{"q", Q("-1")}}), 0);
  EXPECT_EQ(evaluate(S("2/p"), {{"p", Q("1/2")}}), 4);
  EXPECT_EQ(evaluate(S("-(q+1)"), {{"q", Q("2")}}), -3);
  EXPECT_THROW(evaluate(S("p+q"), {{"p", Q("1")}}), UnboundParameter);
  EXPECT_THROW(evaluate(S("1/(q+1)"), {{"q", Q("-1")}}), PoleAtSamplePoint);
}

TEST(Scalar, Identically_zero) {
  EXPECT_TRUE(is_identically_zero(S("(p+1)-(p+1)")));
  EXPECT_FALSE(is_identically_zero(S("p-q")));
  EXPECT_TRUE(is_identically_zero(S("1/p - q/(p*q)")));
}

TEST(Scalar, ReducedAndNormalized) {
  Scalar a = S("(p^2-1)/(2*p-2)");
  EXPECT_EQ(a, S("1/2*p+1/2"));
  EXPECT_TRUE(a.is_polynomial());
  Scalar b = S("1/(-p)");
  EXPECT_EQ(b, S("-1/p"));
  EXPECT_EQ(b.den().leading_coefficient(), 1);
}

TEST(Scalar, GrammarRoundTrip) {
  for (const char* s : {"-(q+1)", "1/2", "(p^2-1)/p", "2/p", "lambda*gamma-mu^2", "1/2*gamma+1", "-nu/(delta+1)",
                        "p^2", "(p-q)^3/(p*q)"}) {
    Scalar x = S(s);
    EXPECT_EQ(S(x.str()), x) << s << " -> " << x.str();
  }
  EXPECT_EQ(S("1/2*gamma+1").str(), "1/2*gamma+1");
  EXPECT_EQ(S("p*p").str(), "p^2");
  EXPECT_THROW(S("p+"), ParseError);
  EXPECT_THROW(S("zeta"), ParseError);
  EXPECT_THROW(S("(p"), ParseError);
}

TEST(Scalar, SubstitutePartial) {
  Scalar s = S("p*q + lambda");
  EXPECT_EQ(s.substitute(Assignment{{"p", Q("2")}}), S("2*q+lambda"));
  std::map<std::size_t, Scalar> m{{1, S("-p")}};
  EXPECT_EQ(s.substitute(m), S("-p^2+lambda"));
}

TEST(ScalarProperty, FieldLaws) {
  std::mt19937 g(11);
  for (int it = 0; it < kIterations; ++it) {
    Scalar a = rand_scalar(g), b = rand_scalar(g), c = rand_scalar(g);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Scalar());
    if (!a.is_zero()) {
      EXPECT_EQ(a / a, Scalar(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(ScalarProperty, EvaluateIsHomomorphism) {
  std::mt19937 g(12);
  int checked = 0;
  for (int it = 0; it < kIterations; ++it) {
    Scalar a = rand_scalar(g), b = rand_scalar(g);
    Assignment at{{"p", rand_rational(g)}, {"q", rand_rational(g)}, {"lambda", rand_rational(g)}};
    try {
      Rational ea = evaluate(a, at), eb = evaluate(b, at);
      EXPECT_EQ(evaluate(a * b, at), ea * eb);
      EXPECT_EQ(evaluate(a + b, at), ea + eb);
      ++checked;
    } catch (const PoleAtSamplePoint&) {
    }
  }
  EXPECT_GT(checked, kIterations / 2);
}

TEST(ScalarProperty, CanonicalFormIsUnique) {
  std::mt19937 g(13);
  for (int it = 0; it < kIterations; ++it) {
    Scalar a = rand_scalar(g), b = rand_scalar(g);
    if (b.is_zero()) continue;
    Scalar x = (a * b) / b;
    EXPECT_EQ(x, a);
    EXPECT_EQ(x.str(), a.str());
    EXPECT_EQ(S(x.str()), a);
  }
}
