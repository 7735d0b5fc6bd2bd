#include "concordia/golden.hpp"

#include <algorithm>
#include <functional>

#include "concordia/error.hpp"

namespace concordia {

namespace {

Value q(long long a, long long b = 1) { return Value::scalar(Rational(a, b)); }

void add(std::vector<CheckRow>& rows, const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
  try {
    auto [ok, detail] = fn();
    rows.push_back({name, ok, detail});
  } catch (const Error& e) {
    rows.push_back({name, false, std::string(e.name()) + ": " + e.what()});
  }
}

const std::vector<Rational> kProfileSamples = {Rational(1, 8), Rational(1, 4), Rational(1, 3),
                                               Rational(1, 2), Rational(2, 3), Rational(1)};

}  // namespace

std::vector<CheckRow> golden_suite() {
  std::vector<CheckRow> rows;
  add(rows, "L is the image of V in S_BN", [] {
    return std::pair{quotient_to_bn(constant_V(Ring::Full)) == constant_L(Ring::BN), std::string("V -> L")};
  });
  add(rows, "Example A: (pi, lambda) = (1, 1) and leading form of sigma(P)", [] {
    BaseChange a = builtin("A");
    auto [pi, lambda] = a.pi_lambda();
    Poly2 lf = leading_form(a.sigma_P().numerator(), a.weight());
    Poly2 expected = parse_rational_function("(q2^2*q3^2 + q3^2*q1^2 + q1^2*q2^2)*x^4").numerator();
    return std::pair{pi == q(1) && lambda == q(1) && lf == expected,
                     "(" + pi.to_string() + ", " + lambda.to_string() + "), " + lf.to_string()};
  });
  add(rows, "Example B: (pi, lambda) = (1, r)", [] {
    bool ok = true;
    std::string d;
    for (auto r : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
      auto [pi, lambda] = builtin("B", r).pi_lambda();
      ok = ok && pi == q(1) && lambda == Value::scalar(r);
      d += "(" + pi.to_string() + ", " + lambda.to_string() + ") ";
    }
    return std::pair{ok, d};
  });
  add(rows, "Example C: ord P = (1,0), ord V = (0,1)", [] {
    auto [pi, lambda] = builtin("C").pi_lambda();
    return std::pair{pi == Value::lex(1, 0) && lambda == Value::lex(0, 1), pi.to_string() + ", " + lambda.to_string()};
  });
  add(rows, "Example D: sigma(P) = sigma(V)", [] {
    BaseChange d = builtin("D");
    return std::pair{d.sigma_P() == d.sigma_V(), d.sigma_P().to_string()};
  });
  add(rows, "Example C': sigma(P) = 0 and ord sigma(L) = 1", [] {
    BaseChange c = builtin("Cprime");
    RationalFunction l = c.apply(constant_L(Ring::BN));
    return std::pair{c.sigma_P().is_zero() && c.ord(l) == q(1), "sigma(L) = " + l.to_string()};
  });
  add(rows, "trefoil: z_BN = <L, P>", [] {
    FractionalIdeal z = znat_ring(catalog_model("trefoil"));
    return std::pair{z.same_as(FractionalIdeal::parse("L,P", Ring::BN)), z.to_string()};
  });
  add(rows, "left trefoil: z_BN = <1>", [] {
    FractionalIdeal z = znat_ring(catalog_model("trefoil_left"));
    return std::pair{z.is_unit_ideal(), z.to_string()};
  });
  add(rows, "trefoil: f_r = r", [] {
    KnotModel k = catalog_model("trefoil");
    bool ok = std::all_of(kProfileSamples.begin(), kProfileSamples.end(), [&](const Rational& r) { return f_r(k, r) == r; });
    return std::pair{ok, std::string("6 samples")};
  });
  add(rows, "left trefoil: f_r = -r", [] {
    KnotModel k = catalog_model("trefoil_left");
    bool ok =
        std::all_of(kProfileSamples.begin(), kProfileSamples.end(), [&](const Rational& r) { return f_r(k, r) == -r; });
    return std::pair{ok, std::string("6 samples")};
  });
  add(rows, "relation (L, P) presents J = <P, L>", [] {
    FractionalIdeal j = module_quotient_rank1({{constant_L(Ring::BN), constant_P(Ring::BN)}});
    return std::pair{j.same_as(FractionalIdeal::parse("P,L", Ring::BN)), j.to_string()};
  });
  add(rows, "Example E: z = <P, V^3>", [] {
    FractionalIdeal z = znat_ring(catalog_model("exampleE"));
    return std::pair{z.same_as(FractionalIdeal::parse("P,V^3", Ring::Full)), z.to_string()};
  });
  add(rows, "Example E: f_r = 3r up to 1/3, then 1", [] {
    KnotModel k = catalog_model("exampleE");
    bool ok = true;
    for (auto r : {Rational(1, 6), Rational(1, 4), Rational(1, 3)}) ok = ok && f_r(k, r) == r * Rational(3);
    for (auto r : {Rational(1, 3), Rational(1, 2), Rational(1)}) ok = ok && f_r(k, r) == Rational(1);
    return std::pair{ok, std::string("breakpoint 1/3")};
  });
  add(rows, "Example E: f_plus = 3", [] {
    Rational f = f_plus(catalog_model("exampleE"));
    return std::pair{f == Rational(3), f.to_string()};
  });
  add(rows, "Example E: three positive double points but no fewer", [] {
    FractionalIdeal z = FractionalIdeal::parse("P,V^3", Ring::Full);
    auto region = g_region(z, 0, 3);
    std::vector<std::pair<int, int>> expected = {{0, 3}};
    return std::pair{region == expected, std::string("(0,3) only on the g = 0 line")};
  });
  add(rows, "trefoil: f_1/2 of the connected sums", [] {
    KnotModel t = catalog_model("trefoil"), l = catalog_model("trefoil_left_cycle");
    Rational tt = f_r(connected_sum(t, t), Rational(1, 2)), tl = f_r(connected_sum(t, l), Rational(1, 2));
    return std::pair{tt == Rational(1) && tl == Rational(0), tt.to_string() + ", " + tl.to_string()};
  });
  for (const auto& r : verify_skein_consistency()) rows.push_back({"skein: " + r.name, r.pass, r.detail});
  add(rows, "conjecture: LP is not in the K(3,4) ideal", [] {
    CatalogEntry e = catalog_get("k34_conjectural");
    std::string list;
    for (const auto& g : e.expected_ideal) list += (list.empty() ? "" : ",") + g;
    bool in = FractionalIdeal::parse(list, Ring::BN).contains(parse_laurent_fraction("L*P", Ring::BN));
    return std::pair{!in, std::string(in ? "LP is a member" : "LP is not a member")};
  });
  return rows;
}

}  // namespace concordia
