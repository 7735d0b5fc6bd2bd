// One line per acceptance criterion.  Exit status is nonzero when any of
// criteria 1-10 fails; criterion 11 is a conjecture pin and only reported.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "concordia/catalog.hpp"
#include "concordia/error.hpp"
#include "concordia/invariants.hpp"

using namespace concordia;

namespace {

Value q(long long a, long long b = 1) { return Value::scalar(Rational(a, b)); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return {false, std::string(e.name()) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

using Region = std::vector<std::pair<int, int>>;

bool has(const Region& r, int g, int d) { return std::find(r.begin(), r.end(), std::pair{g, d}) != r.end(); }

Outcome c1() {
  FractionalIdeal z = znat_ring(catalog_model("trefoil"));
  FractionalIdeal j = FractionalIdeal::parse("L,P", Ring::BN);
  bool ok = j.contains(z) && z.contains(j);
  return {ok, "z_BN = " + z.to_string() + (ok ? " = <L, P>" : "")};
}

Outcome c2() {
  KnotModel t = catalog_model("trefoil"), l = catalog_model("trefoil_left");
  std::string d;
  bool ok = true;
  for (const Rational& r : {Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}) {
    Rational a = f_r(t, r), b = f_r(l, r);
    ok = ok && a == r && b == -r;
    d += r.to_string() + ":" + a.to_string() + "/" + b.to_string() + " ";
  }
  return {ok, "r:f(K)/f(K-) " + d};
}

Outcome c3() {
  KnotModel l = catalog_model("trefoil_left");
  BaseChange b = builtin("B", Rational(1, 2));
  HomologySummary h = homology_over_valuation(l.complex, b);
  std::size_t free = 0;
  std::vector<Value> torsion;
  for (const auto& d : h.degrees) {
    free += d.free_rank;
    torsion.insert(torsion.end(), d.torsion.begin(), d.torsion.end());
  }
  FractionalIdeal z = znat_ring(l);
  Value ord = ideal_ord(ValuationIdeal::over(b, {b.apply(LaurentElement::one(Ring::BN))}));
  bool ok = free == 1 && torsion == std::vector<Value>{q(1, 2)} && z.is_unit_ideal() && ord == q(0);
  return {ok, "free rank " + std::to_string(free) + ", torsion ords " +
                  (torsion.empty() ? std::string("none") : torsion.front().to_string()) +
                  (torsion.size() > 1 ? " and more" : "") + ", z_BN = " + z.to_string() + " of ord " + ord.to_string()};
}

Outcome c4() {
  KnotModel e = catalog_model("exampleE");
  bool ok = true;
  for (const Rational& r : {Rational(1, 6), Rational(1, 4), Rational(1, 3)}) ok = ok && f_r(e, r) == Rational(3) * r;
  for (const Rational& r : {Rational(1, 3), Rational(1, 2), Rational(1)}) ok = ok && f_r(e, r) == Rational(1);
  Rational fp = f_plus(e);
  ok = ok && fp == Rational(3);
  return {ok, "3r on {1/6,1/4,1/3}, 1 on {1/3,1/2,1}, f_plus = " + fp.to_string()};
}

Outcome c5() {
  std::string d;
  BaseChange a = builtin("A");
  auto [pa, la] = a.pi_lambda();
  Poly2 lf = leading_form(a.sigma_P().numerator(), a.weight());
  Poly2 want = parse_rational_function("(q2^2*q3^2 + q3^2*q1^2 + q1^2*q2^2)*x^4").numerator();
  bool ok_a = pa == q(1) && la == q(1) && lf == want;
  d += std::string("A ") + (ok_a ? "ok" : "bad");
  bool ok_b = true;
  for (const Rational& r : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
    auto [p, l] = builtin("B", r).pi_lambda();
    ok_b = ok_b && p == q(1) && l == Value::scalar(r);
  }
  d += std::string(", B ") + (ok_b ? "ok" : "bad");
  auto [pc, lc] = builtin("C").pi_lambda();
  bool ok_c = pc == Value::lex(1, 0) && lc == Value::lex(0, 1);
  d += std::string(", C ") + (ok_c ? "ok" : "bad");
  BaseChange dd = builtin("D");
  bool ok_d = dd.sigma_P() == dd.sigma_V();
  d += std::string(", D ") + (ok_d ? "ok" : "bad");
  BaseChange cp = builtin("Cprime");
  bool ok_cp = cp.sigma_P().is_zero() && cp.ord(cp.apply(constant_L(Ring::BN))) == q(1);
  d += std::string(", C' ") + (ok_cp ? "ok" : "bad");
  return {ok_a && ok_b && ok_c && ok_d && ok_cp, d};
}

Outcome c6() {
  KnotModel a = assemble_trefoil_from_skein(), t = catalog_model("trefoil");
  bool same = a.complex == t.complex && a.cycle == t.cycle;
  HopfSkeinData h = hopf_skein_data();
  bool sg = (h.s_g * h.x)(0, 0) == constant_P(Ring::BN);
  bool sd = (h.s_delta * h.x)(0, 0) == constant_L(Ring::BN);
  return {same && sg && sd, std::string("assembled ") + (same ? "equals" : "differs from") + " the catalog trefoil, S_g X " +
                                (sg ? "= P" : "!= P") + ", S_delta X " + (sd ? "= L" : "!= L")};
}

Outcome c7() {
  KnotModel t = catalog_model("trefoil"), l = catalog_model("trefoil_left_cycle");
  Rational tt = f_r(connected_sum(t, t), Rational(1, 2)), tl = f_r(connected_sum(t, l), Rational(1, 2));
  return {tt == Rational(1) && tl == Rational(0), "f_1/2(K#K) = " + tt.to_string() + ", f_1/2(K#K-) = " + tl.to_string()};
}

Outcome c8() {
  UnknottingBound u = unknotting_bound(catalog_model("trefoil_left"), builtin("B", Rational(1, 2)));
  bool ann = !u.annihilation.empty() && u.annihilation.front() == std::pair{1, true};
  return {u.bound == Rational(1) && ann, "tau/lambda = " + u.tau.to_string() + "/" + u.lambda.to_string() + " = " +
                                             u.bound.to_string() + ", <L,P>^1 annihilates: " + (ann ? "yes" : "no")};
}

Outcome c9() {
  Region j = g_region(FractionalIdeal::parse("L,P", Ring::BN), 2, 2);
  bool ok_j = j.size() == 8 && !has(j, 0, 0);
  Region e = g_region(FractionalIdeal::parse("P,V^3", Ring::Full), 1, 3);
  bool ok_e = !has(e, 0, 1) && !has(e, 0, 2) && has(e, 1, 0) && has(e, 0, 3);
  return {ok_j && ok_e, "<L,P> 3x3 box: " + std::to_string(j.size()) + "/9 in, (0,0) " + (has(j, 0, 0) ? "in" : "out") +
                            "; <P,V^3> 2x4 box: (0,1),(0,2) " + (ok_e ? "out, (1,0),(0,3) in" : "wrong")};
}

struct Suite {
  const char* binary;
  const char* filter;
  const char* label;
};

Outcome c10() {
  const std::vector<Suite> suites = {
      {TEST_VALUATION, "valuation axioms on random pairs", "valuation axioms and leading forms"},
      {TEST_BASECHANGE, "apply is a ring homomorphism*", "apply is a homomorphism"},
      {TEST_HOMALG, "property: d^2 = 0*", "d^2 = 0 under cone, tensor, dual"},
      {TEST_HOMALG, "property: elementary divisor*", "elementary divisor invariance"},
      {TEST_GROEBNER, "property: determinism*", "Groebner determinism"},
  };
  bool ok = true;
  std::string d;
  std::regex summary(R"(test cases:\s*(\d+)\s*\|\s*(\d+) passed\s*\|\s*(\d+) failed)");
  for (const auto& s : suites) {
    std::string cmd = std::string("'") + s.binary + "' '--test-case=" + s.filter + "' 2>&1";
    std::string text;
    if (FILE* p = ::popen(cmd.c_str(), "r")) {
      std::array<char, 4096> buf{};
      while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) text += buf.data();
      int status = ::pclose(p);
      std::smatch m;
      bool good = status == 0 && std::regex_search(text, m, summary) && std::stoi(m[1]) >= 1 && m[3] == "0";
      ok = ok && good;
      d += std::string(s.label) + (good ? " ok; " : " FAILED; ");
    } else {
      ok = false;
      d += std::string(s.label) + " could not run; ";
    }
  }
  return {ok, d + "1000 cases each"};
}

Outcome c11() {
  CatalogEntry e = catalog_get("k34_conjectural");
  std::string list;
  for (const auto& g : e.expected_ideal) list += (list.empty() ? "" : ",") + g;
  bool in = FractionalIdeal::parse(list, Ring::BN).contains(parse_laurent_fraction("L*P", Ring::BN));
  return {!in, in ? "LP is in the ideal" : "LP is not in <L^3, L^2P, LP^2, P^3, Y>"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*fn)();
  };
  const std::vector<Criterion> criteria = {
      {1, "trefoil ideal", c1},
      {2, "trefoil profile", c2},
      {3, "left trefoil structure", c3},
      {4, "Example E", c4},
      {5, "base-change orders", c5},
      {6, "skein assembly", c6},
      {7, "homomorphism property", c7},
      {8, "unknotting bound", c8},
      {9, "G-region", c9},
      {10, "property suites", c10},
      {11, "conjecture pin (non-blocking)", c11},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    Outcome o = guarded(c.fn);
    if (c.id != 11 && !o.pass) ok = false;
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
              << "]\n";
  }
  std::cout << (ok ? "acceptance: all blocking criteria pass\n" : "acceptance: FAILED\n");
  return ok ? 0 : 1;
}
