#include "doctest.h"

#include <random>

#include "concordia/error.hpp"
#include "concordia/ideals.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace concordia;

namespace {

LaurentFraction bn(const char* s) { return parse_laurent_fraction(s, Ring::BN); }
LaurentFraction full(const char* s) { return parse_laurent_fraction(s, Ring::Full); }
Value q(long long a, long long b = 1) { return Value::scalar(Rational(a, b)); }

using Region = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("membership in the trefoil ideal") {
  auto j = FractionalIdeal::parse("L,P", Ring::BN);
  CHECK(j.contains(bn("P")));
  CHECK(j.contains(bn("L*T2^-3 + P*T1")));
  CHECK_FALSE(j.contains(bn("1")));
  CHECK_FALSE(j.contains(bn("T1^2 + T1^-2 + T2^2")));
  CHECK(j.contains(bn("P^2/L")) == false);
  CHECK(j.to_string() == "<L, P>");
  CHECK_FALSE(j.is_unit_ideal());
}

TEST_CASE("oracle: L and P have common zeros, so 1 is not in <L, P>") {
  // L + P = T1^2 + T1^-2 vanishes at T1 = 1, and then P vanishes when T3 = 1.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    oracle::GF256 t2{0};
    while (t2.v == 0) t2.v = static_cast<std::uint8_t>(rng());
    std::array<oracle::GF256, 4> pt = {oracle::GF256{1}, oracle::GF256{1}, t2, oracle::GF256{1}};
    CHECK(oracle::eval(constant_L(Ring::BN), pt).v == 0);
    CHECK(oracle::eval(constant_P(Ring::BN), pt).v == 0);
  }
  CHECK_FALSE(membership(bn("1"), FractionalIdeal::parse("L,P", Ring::BN)));
}

TEST_CASE("oracle: V and V^2 are not in <P, V^3> by a valuation bound") {
  // Elements aP + bV^3 with a, b in R map under Example B (all T_i to units of
  // the valuation ring) to ord >= min(1, 3r); with r = 1/4 this is 3/4, while
  // ord V = 1/4 and ord V^2 = 1/2.
  BaseChange b = builtin("B", Rational(1, 4));
  CHECK(b.ord(b.sigma_V()) == q(1, 4));
  CHECK(b.ord(b.sigma_V() * b.sigma_V()) == q(1, 2));
  for (const auto& img : b.images()) CHECK(b.ord(img) == q(0));
  auto e = FractionalIdeal::parse("P, V^3", Ring::Full);
  CHECK_FALSE(e.contains(full("V")));
  CHECK_FALSE(e.contains(full("V^2")));
  CHECK(e.contains(full("V^3")));
  CHECK(e.contains(full("P*V")));
}

TEST_CASE("g region") {
  auto j = FractionalIdeal::parse("L,P", Ring::BN);
  CHECK(g_region(j, 2, 2) == Region{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  Region r3 = g_region(j, 3, 3);
  CHECK(r3.size() == 15);
  CHECK(std::find(r3.begin(), r3.end(), std::pair{0, 0}) == r3.end());
  Region unit = g_region(FractionalIdeal::unit(Ring::BN), 1, 1);
  CHECK(unit == Region{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  Region e = g_region(FractionalIdeal::parse("P, V^3", Ring::Full), 1, 3);
  CHECK(e == Region{{0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(g_region(j, -1, 2), Error);
}

TEST_CASE("g region is upward closed") {
  auto e = FractionalIdeal::parse("P, V^3", Ring::Full);
  Region r = g_region(e, 2, 4);
  auto has = [&](int g, int d) { return std::find(r.begin(), r.end(), std::pair{g, d}) != r.end(); };
  for (auto [g, d] : r) {
    if (g < 2) CHECK(has(g + 1, d));
    if (d < 4) CHECK(has(g, d + 1));
  }
}

TEST_CASE("ideal products") {
  auto j = FractionalIdeal::parse("L,P", Ring::BN);
  auto j2 = ideal_product(j, j);
  CHECK(j2.same_as(FractionalIdeal::parse("L^2, L*P, P^2", Ring::BN)));
  CHECK(ideal_product(FractionalIdeal::unit(Ring::BN), j).same_as(j));
  CHECK(ideal_power(j, 0).is_unit_ideal());
  CHECK(ideal_power(j, 2).same_as(j2));
  CHECK_FALSE(j2.contains(bn("L")));
  CHECK_THROWS_AS(ideal_product(j, FractionalIdeal::unit(Ring::Full)), Error);
}

TEST_CASE("fractional generators") {
  auto i = FractionalIdeal::parse("1/L, P/L", Ring::BN);
  CHECK(i.contains(bn("1/L")));
  CHECK(i.contains(bn("1")));
  CHECK_FALSE(i.contains(bn("1/(L*P)")));
  CHECK(ideal_product(i, FractionalIdeal::parse("L", Ring::BN)).same_as(FractionalIdeal::parse("1, P", Ring::BN)));
  CHECK_THROWS_AS(FractionalIdeal::parse("0", Ring::BN), Error);
  CHECK_THROWS_AS(FractionalIdeal::parse("L,,P", Ring::BN), Error);
}

TEST_CASE("module quotient of a rank one presentation") {
  LaurentElement l = constant_L(Ring::BN), p = constant_P(Ring::BN);
  CHECK(module_quotient_rank1({{l, p}}).same_as(FractionalIdeal::parse("P, L", Ring::BN)));
  auto one = LaurentElement::one(Ring::BN), zero = LaurentElement::zero(Ring::BN);
  CHECK(module_quotient_rank1({{one, zero}}).is_unit_ideal());
  LaurentElement v = constant_V(Ring::Full);
  CHECK(module_quotient_rank1({{v * v * v, constant_P(Ring::Full)}})
            .same_as(FractionalIdeal::parse("P, V^3", Ring::Full)));
  // a common factor is divided out
  CHECK(module_quotient_rank1({{l * p, p * p}}).same_as(FractionalIdeal::parse("P, L", Ring::BN)));
  try {
    module_quotient_rank1({{l, p}, {p, l}});
    FAIL("expected UnsupportedPresentation");
  } catch (const Error& e) {
    CHECK(e.name() == "UnsupportedPresentation");
  }
  CHECK_THROWS_AS(module_quotient_rank1({{l, p, one}}), Error);
}

TEST_CASE("conjectural K(3,4) ideal pins LP outside") {
  auto k = FractionalIdeal::parse("L^3, L^2*P, L*P^2, P^3, (1+T1^-2)*P^2+L^2", Ring::BN);
  CHECK_FALSE(k.contains(bn("L*P")));
  CHECK(k.contains(bn("L^3 + P^3")));
}

TEST_CASE("comparison rewrite") {
  CHECK(ae_rewrite("u^2, u*w, w^2") == "L^2, L*P, P^2");
  CHECK(ae_rewrite("uu + w1") == "uu + w1");
  CHECK(FractionalIdeal::parse(ae_rewrite("u, w"), Ring::BN).same_as(FractionalIdeal::parse("L,P", Ring::BN)));
}

TEST_CASE("valuation ideals") {
  BaseChange b = builtin("B", Rational(1, 2));
  auto i = ValuationIdeal::over(b, {b.apply(constant_L(Ring::BN)), b.apply(constant_P(Ring::BN))});
  CHECK(ideal_ord(i) == q(1, 2));
  CHECK(ideal_ord(ideal_product(i, i)) == q(1));
  BaseChange c = builtin("C");
  auto ic = ValuationIdeal::over(c, {c.apply(constant_L(Ring::BN)), c.apply(constant_P(Ring::BN))});
  CHECK(ideal_ord(ic) == Value::lex(0, 1));
  CHECK(ideal_ord(ValuationIdeal({RationalFunction::one()}, b.weight())) == q(0));
  CHECK_THROWS_AS(ValuationIdeal({RationalFunction()}, b.weight()), Error);
  CHECK_THROWS_AS(ValuationIdeal::over(builtin("Cprime"), {RationalFunction::one()}), Error);
}

TEST_CASE("property: membership is multiplicative and ords add") {
  std::mt19937_64 rng(99);
  MonomialWeight w(ValueKind::Scalar, {{Var::x, q(1, 4)}, {Var::u, q(1, 8)}});
  const std::vector<Var> vars = {Var::x, Var::u, Var::q1};
  for (int iter = 0; iter < 1000; ++iter) {
    RationalFunction a(gen::nonzero_poly(rng, vars, 3, 3), gen::nonzero_poly(rng, vars, 2, 2));
    RationalFunction b(gen::nonzero_poly(rng, vars, 3, 3), gen::nonzero_poly(rng, vars, 2, 2));
    ValuationIdeal ia({a, a * b}, w), ib({b}, w);
    CHECK(ideal_ord(ideal_product(ia, ib)) == ideal_ord(ia) + ideal_ord(ib));
  }
  auto j = FractionalIdeal::parse("L,P", Ring::BN);
  auto k = FractionalIdeal::parse("L^2 + P", Ring::BN);
  auto jk = ideal_product(j, k);
  for (int iter = 0; iter < 1000; ++iter) {
    LaurentElement f = gen::laurent(rng, Ring::BN, 2, 1) * constant_L(Ring::BN) +
                       gen::laurent(rng, Ring::BN, 2, 1) * constant_P(Ring::BN);
    LaurentElement g = gen::laurent(rng, Ring::BN, 2, 1) * (constant_L(Ring::BN).pow(2) + constant_P(Ring::BN));
    CHECK(j.contains(LaurentFraction(f)));
    CHECK(k.contains(LaurentFraction(g)));
    CHECK(jk.contains(LaurentFraction(f * g)));
  }
}
