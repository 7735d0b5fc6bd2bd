#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "concordia/error.hpp"
#include "concordia/groebner.hpp"
#include "random_gen.hpp"

using namespace concordia;

namespace {

Poly2 F(const char* s) { return parse_rational_function(s).numerator(); }

Poly2 spoly(const GroebnerBasis& gb, std::size_t i, std::size_t j) {
  auto lead = [](const Poly2& p) {
    Monomial best = p.terms().front();
    for (const auto& m : p.terms())
      if (grevlex_compare(m, best) > 0) best = m;
    return best;
  };
  const Poly2& a = gb.basis()[i];
  const Poly2& b = gb.basis()[j];
  Monomial la = lead(a), lb = lead(b), l = la.lcm(lb);
  return a * Poly2::monomial(l / la) + b * Poly2::monomial(l / lb);
}

}  // namespace

TEST_CASE("grevlex order") {
  Monomial t0 = Monomial::var(Var::T0), t1 = Monomial::var(Var::T1), u0 = Monomial::var(Var::U0);
  CHECK(grevlex_compare(t0, t1) > 0);
  CHECK(grevlex_compare(t1, u0) > 0);
  CHECK(grevlex_compare(t0 * t0, t1) > 0);
  // same degree: the smaller power of the last variable wins
  CHECK(grevlex_compare(t0 * Monomial::var(Var::T3), t1 * t1) < 0);
  CHECK(grevlex_compare(t0, t0) == 0);
}

TEST_CASE("small bases") {
  auto gb = GroebnerBasis::compute({F("T1^2 + T2"), F("T1*T2 + 1")});
  for (const auto& g : {F("T1^2 + T2"), F("T1*T2 + 1")}) CHECK(gb.contains(g));
  CHECK_FALSE(gb.contains(F("T1")));
  CHECK(GroebnerBasis::compute({F("T1"), F("T1 + 1")}).is_unit_ideal());
  CHECK(GroebnerBasis::compute({}).basis().empty());
  CHECK(GroebnerBasis::compute({F("T1*U1 + 1"), F("T1")}).is_unit_ideal());
  CHECK_THROWS_AS(GroebnerBasis::compute({F("x + T1")}), Error);
}

TEST_CASE("degree cap") {
  std::vector<Poly2> gens = {F("T1^3*T2 + T3^2"), F("T2^3 + T1*T3^2 + T1"), F("T3^3*T1 + T2")};
  try {
    GroebnerBasis::compute(gens, 4);
    FAIL("expected the cap to trigger");
  } catch (const Error& e) {
    CHECK(e.name() == "GroebnerDegreeCap");
  }
  ::setenv("CONCORDIA_GB_MAXDEG", "4", 1);
  CHECK_THROWS_AS(GroebnerBasis::compute(gens), Error);
  ::unsetenv("CONCORDIA_GB_MAXDEG");
  CHECK_NOTHROW(GroebnerBasis::compute(gens));
}

TEST_CASE("property: determinism under generator shuffles, reducedness and S-pair closure") {
  std::mt19937_64 rng(4242);
  const std::vector<Var> vars = {Var::T1, Var::T2, Var::T3};
  std::uniform_int_distribution<int> ngen(1, 3);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<Poly2> gens;
    int n = ngen(rng);
    for (int i = 0; i < n; ++i) gens.push_back(gen::nonzero_poly(rng, vars, 3, 2));
    GroebnerBasis gb = GroebnerBasis::compute(gens);
    std::vector<Poly2> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // also add a redundant combination
    shuffled.push_back(gens[0] * gen::poly(rng, vars, 2, 1));
    CHECK(GroebnerBasis::compute(shuffled) == gb);
    for (const auto& g : gens) CHECK(gb.contains(g));
    for (std::size_t i = 0; i < gb.basis().size(); ++i)
      for (std::size_t j = i + 1; j < gb.basis().size(); ++j) CHECK(gb.reduce(spoly(gb, i, j)).is_zero());
    // a constructed member reduces to zero
    Poly2 member;
    for (const auto& g : gens) member += g * gen::poly(rng, vars, 2, 2);
    CHECK(gb.contains(member));
  }
}
