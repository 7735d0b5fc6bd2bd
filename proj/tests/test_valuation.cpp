#include "doctest.h"

#include "concordia/error.hpp"
#include "concordia/valuation.hpp"
#include "random_gen.hpp"

using namespace concordia;

namespace {
Poly2 P(const char* s) { return parse_rational_function(s).numerator(); }
RationalFunction F(const char* s) { return parse_rational_function(s); }
Value q(long long a, long long b = 1) { return Value::scalar(Rational(a, b)); }
Value lx(long long a, long long b) { return Value::lex(a, b); }

MonomialWeight scalar_quarter() {
  return MonomialWeight(ValueKind::Scalar, {{Var::x, q(1, 4)}, {Var::y, q(1, 4)}, {Var::u, q(1, 8)}});
}
MonomialWeight lex_quarter() {
  return MonomialWeight(ValueKind::Lex, {{Var::x, Value::lex(Rational(1, 4), 0)}, {Var::y, Value::lex(0, Rational(1, 4))}});
}
}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-3/6").to_string() == "-1/2");
  CHECK(Rational::parse("5").to_string() == "5");
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/2"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("value groups") {
  CHECK(lx(1, 0) > lx(0, 5));
  CHECK(lx(0, 1) + lx(1, 0) == lx(1, 1));
  CHECK((q(1, 2) * 3).to_string() == "3/2");
  CHECK(lx(0, 1).to_string() == "(0, 1)");
  CHECK_THROWS_AS((void)(q(1) < lx(0, 1)), Error);
  try {
    (void)(q(1) + lx(0, 1));
  } catch (const Error& e) {
    CHECK(e.name() == "ValueGroupMismatch");
  }
}

TEST_CASE("ord of polynomials") {
  auto w = scalar_quarter();
  CHECK(ord_poly(P("y^4 + y^6"), w) == q(1));
  CHECK(ord_poly(P("1"), w) == q(0));
  CHECK(ord_poly(P("x^4*y^8"), lex_quarter()) == lx(1, 2));
  CHECK(ord_poly(P("q1^5*q2 + x"), w) == q(0));
  CHECK_THROWS_AS(ord_poly(Poly2(), w), Error);
}

TEST_CASE("ord of rational functions") {
  auto w = scalar_quarter();
  CHECK(ord_rf(F("y^4/(1+y^2)"), w) == q(1));
  CHECK(ord_rf(F("(1+y)/(1+y)"), w) == q(0));
  CHECK(ord_rf(F("x^4*q1^4/(1+x)"), w) == q(1));
  CHECK(ord_rf(F("1/x"), w) == q(-1, 4));
  try {
    ord_rf(RationalFunction(), w);
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.name() == "ZeroElement");
  }
}

TEST_CASE("leading forms") {
  auto w = scalar_quarter();
  CHECK(leading_form(P("q1*x + q2*x + x^2"), w) == P("(q1+q2)*x"));
  CHECK(leading_form(P("y^4 + x*y"), lex_quarter()) == P("y^4"));
}

TEST_CASE("weights must be positive and of the right kind") {
  MonomialWeight w(ValueKind::Scalar);
  CHECK_THROWS_AS(w.set(Var::x, q(0)), Error);
  CHECK_THROWS_AS(w.set(Var::x, lx(1, 0)), Error);
  CHECK_THROWS_AS(w.set(Var::q1, q(1)), Error);
  CHECK(w[Var::q1] == q(0));
}

TEST_CASE("valuation axioms on random pairs") {
  std::mt19937_64 rng(31);
  std::vector<Var> vars{Var::q1, Var::q2, Var::x, Var::y, Var::u};
  for (const auto& w : {scalar_quarter(), lex_quarter()}) {
    for (int i = 0; i < 1000; ++i) {
      Poly2 a = gen::nonzero_poly(rng, vars, 4, 3), b = gen::nonzero_poly(rng, vars, 4, 3);
      Value oa = ord_poly(a, w), ob = ord_poly(b, w);
      CHECK(ord_poly(a * b, w) == oa + ob);
      Poly2 s = a + b;
      if (!s.is_zero()) {
        Value os = ord_poly(s, w);
        CHECK(os >= std::min(oa, ob));
        if (oa != ob) CHECK(os == std::min(oa, ob));
      }
      CHECK(leading_form(a * b, w) == leading_form(a, w) * leading_form(b, w));
      RationalFunction f(a, b);
      CHECK(ord_rf(f, w) == oa - ob);
    }
  }
}

TEST_CASE("lexicographic order is total and translation invariant") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int i = 0; i < 1000; ++i) {
    Value a = lx(d(rng), d(rng)), b = lx(d(rng), d(rng)), c = lx(d(rng), d(rng));
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a <= b && b <= a) CHECK(a == b);
    CHECK((a < b) == (a + c < b + c));
    if (a < b && b < c) CHECK(a < c);
  }
}
