#include "doctest.h"

#include <functional>

#include "concordia/catalog.hpp"
#include "concordia/error.hpp"
#include "concordia/golden.hpp"
#include "concordia/model_io.hpp"

using namespace concordia;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.name());
  }
  return "";
}

}  // namespace

TEST_CASE("catalog entries") {
  auto names = catalog_names();
  for (const char* n : {"unknot", "hopf_skein_data", "trefoil", "trefoil_left", "exampleE", "k34_conjectural"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (const auto& n : names) {
    CatalogEntry e = catalog_get(n);
    CHECK(e.name == n);
    CHECK_FALSE(e.provenance.empty());
  }
  CHECK(catalog_get("k34_conjectural").conjecture);
  CHECK_FALSE(catalog_get("k34_conjectural").complex);
  CHECK_FALSE(catalog_get("trefoil").conjecture);
  CHECK(error_of([] { catalog_get("figure8"); }) == "UnknownKnot");
  CHECK(error_of([] { catalog_model("k34_conjectural"); }) == "UnknownKnot");
}

TEST_CASE("expected ideals") {
  auto ideal = [](const char* n) {
    CatalogEntry e = catalog_get(n);
    std::string s;
    for (const auto& g : e.expected_ideal) s += (s.empty() ? "" : ",") + g;
    return FractionalIdeal::parse(s, e.ring);
  };
  CHECK(ideal("trefoil").same_as(FractionalIdeal::parse("L,P", Ring::BN)));
  CHECK(ideal("trefoil_left").is_unit_ideal());
  CHECK(ideal("exampleE").same_as(FractionalIdeal::parse("P,V^3", Ring::Full)));
  for (const char* n : {"unknot", "trefoil", "trefoil_left", "exampleE"})
    CHECK(znat_ring(catalog_model(n)).same_as(ideal(n)));
  CHECK(f_r(catalog_model("unknot"), Rational(1, 2)) == Rational(0));
}

TEST_CASE("trefoil boundary") {
  KnotModel t = catalog_model("trefoil");
  LaurentMatrix d = t.complex.differential(1);
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 1);
  CHECK(d(0, 0) == constant_L(Ring::BN));
  CHECK(d(1, 0) == constant_P(Ring::BN));
  CHECK(t.cycle.genus == 0);
  CHECK(t.cycle.dplus == 1);
  CHECK(t.cycle.direction == Direction::UnknotToK);
}

TEST_CASE("skein assembly") {
  KnotModel a = assemble_trefoil_from_skein();
  KnotModel t = catalog_model("trefoil");
  CHECK(a.complex == t.complex);
  CHECK(a.cycle == t.cycle);
  CHECK(f_r(a, Rational(1, 2)) == Rational(1, 2));

  HopfSkeinData h = hopf_skein_data();
  CHECK(h.hopf.rank(0) == 2);
  CHECK(h.x(0, 0) == constant_L(Ring::BN) + constant_P(Ring::BN));
  CHECK((h.s_g * h.x)(0, 0) == constant_P(Ring::BN));
  CHECK((h.s_delta * h.x)(0, 0) == constant_L(Ring::BN));
  for (const auto& row : verify_skein_consistency()) {
    INFO(row.name << ": " << row.detail);
    CHECK(row.pass);
  }
}

TEST_CASE("model files round-trip") {
  for (const auto& n : catalog_names()) {
    CatalogEntry e = catalog_get(n);
    std::string text = to_json(to_model_file(e));
    ModelFile f = parse_model_file(text);
    CHECK(f.name == e.name);
    CHECK(f.ring == e.ring);
    CHECK(f.complex == e.complex);
    CHECK(f.expected_ideal == e.expected_ideal);
    CHECK(f.conjecture == e.conjecture);
    CHECK(to_json(f) == text);
    if (e.model) CHECK(f.model() == *e.model);
  }
}

TEST_CASE("model file errors") {
  CHECK(error_of([] { parse_model_file("{ not json"); }) == "ParseError");
  CHECK(error_of([] { parse_model_file("[1,2]"); }) == "InvalidComplex");
  const char* bad_square = R"({"ring":"BN","degrees":[0,1,2],"ranks":{"0":1,"1":1,"2":1},
    "boundaries":{"1":[["L"]],"2":[["L"]]}})";
  CHECK(error_of([=] { parse_model_file(bad_square); }) == "InvalidComplex");
  const char* bad_key = R"({"ring":"BN","degrees":[0,1],"ranks":{"0":1,"1":1},"boundaries":{"x":[["L"]]}})";
  CHECK(error_of([=] { parse_model_file(bad_key); }) == "InvalidComplex");
  const char* outside = R"({"ring":"BN","degrees":[0,1],"ranks":{"0":1,"1":1},"boundaries":{"5":[["L"]]}})";
  CHECK(error_of([=] { parse_model_file(outside); }) == "InvalidComplex");
  const char* not_cycle = R"({"ring":"BN","degrees":[0,1],"ranks":{"0":1,"1":1},"boundaries":{"1":[["L"]]},
    "cycle":{"degree":0,"vector":["1"]}})";
  CHECK(error_of([=] { parse_model_file(not_cycle); }) == "InvalidComplex");
  const char* wrong_type = R"({"ring":"BN","degrees":[0],"ranks":{"0":1},"cycle":{"vector":["1"]}})";
  CHECK(error_of([=] { parse_model_file(wrong_type); }) == "InvalidComplex");
  const char* no_cycle = R"({"ring":"BN","degrees":[0],"ranks":{"0":1}})";
  CHECK(error_of([=] { parse_model_file(no_cycle).model(); }) == "InvalidComplex");
  const char* bad_entry = R"({"ring":"BN","degrees":[0,1],"ranks":{"0":1,"1":1},"boundaries":{"1":[["L+"]]}})";
  CHECK(error_of([=] { parse_model_file(bad_entry); }) == "ParseError");
}

TEST_CASE("hand-written file matches the catalog trefoil") {
  const char* text = R"({ "name": "trefoil", "ring": "BN", "degrees": [0,1], "ranks": {"0":1,"1":2},
    "boundaries": {"1": [["L","P"]]}, "signature": -2,
    "cycle": {"degree":1, "vector":["0","1"], "genus":0, "dplus":1, "direction":"unknot-to-K"} })";
  KnotModel k = parse_model_file(text).model();
  KnotModel t = catalog_model("trefoil");
  CHECK(k.complex == t.complex);
  CHECK(k.cycle == t.cycle);
  CHECK(k.signature == t.signature);
}

TEST_CASE("golden table") {
  for (const auto& row : golden_suite()) {
    INFO(row.name << ": " << row.detail);
    CHECK(row.pass);
  }
}
