#include "concordia/catalog.hpp"

#include "concordia/error.hpp"

namespace concordia {

namespace {

const Ring BN = Ring::BN;

LaurentElement one(Ring r = BN) { return LaurentElement::one(r); }
LaurentElement zero(Ring r = BN) { return LaurentElement::zero(r); }

LaurentMatrix column(Ring ring, std::vector<LaurentElement> entries) {
  LaurentMatrix m(entries.size(), 1, LaurentElement::zero(ring));
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

LaurentMatrix row(Ring ring, std::vector<LaurentElement> entries) { return column(ring, std::move(entries)).transpose(); }

ChainComplex trefoil_complex() {
  return ChainComplex(BN, 0, {1, 2}, {column(BN, {constant_L(BN), constant_P(BN)})});
}

const std::vector<std::string> kNames = {"unknot",       "hopf_skein_data",    "trefoil", "trefoil_left",
                                         "trefoil_left_cycle", "exampleE", "k34_conjectural"};

}  // namespace

std::vector<std::string> catalog_names() { return kNames; }

CatalogEntry catalog_get(std::string_view name) {
  CatalogEntry e;
  e.name = std::string(name);
  if (name == "unknot") {
    ChainComplex c = ChainComplex::free_module(BN, 0, 1);
    e.complex = c;
    e.model = KnotModel("unknot", c, {0, {one()}, 0, 0, Direction::UnknotToK}, 0, {"1"});
    e.expected_ideal = {"1"};
    e.provenance = "trivial complex; iota is the generator";
  } else if (name == "hopf_skein_data") {
    e.complex = hopf_skein_data().hopf;
    e.provenance = "Hopf link complex S^2 with zero differential; the skein map X = (L+P, P) and the cobordism "
                   "maps S_g, S_delta are available through hopf_skein_data()";
  } else if (name == "trefoil") {
    ChainComplex c = trefoil_complex();
    e.complex = c;
    e.model = KnotModel("trefoil", c, {1, {zero(), one()}, 0, 1, Direction::UnknotToK}, -2, {"L", "P"});
    e.expected_ideal = {"L", "P"};
    e.provenance = "d(1) = (L, P), iota = e2, (g, dplus) = (0, 1); cone of X after the basis change";
  } else if (name == "trefoil_left") {
    ChainComplex c = dualize(trefoil_complex());
    e.complex = c;
    e.model = KnotModel("trefoil_left", c, {-1, {zero(), one()}, 0, 1, Direction::KToUnknot}, 2, {"1"});
    e.expected_ideal = {"1"};
    e.provenance = "dual complex with matrix entries (L, P); the covector sends eps2 to the generator and eps1 "
                   "to 0, image <L>, (g, dplus) = (0, 1)";
  } else if (name == "trefoil_left_cycle") {
    ChainComplex c = dualize(trefoil_complex());
    e.complex = c;
    e.model = KnotModel("trefoil_left_cycle", c,
                        {-1, {constant_P(BN), constant_L(BN)}, 0, 0, Direction::UnknotToK}, 2, {"1"});
    e.expected_ideal = {"1"};
    e.provenance = "derived: the same dual complex with the unknot-to-K cycle P*eps1 + L*eps2 (a generator of "
                   "the cycles) and (g, dplus) = (0, 0); used for connected sums with unknot-to-K models";
  } else if (name == "exampleE") {
    Ring f = Ring::Full;
    LaurentElement v = constant_V(f);
    ChainComplex c(f, 0, {1, 2}, {column(f, {v * v * v, constant_P(f)})});
    e.ring = f;
    e.complex = c;
    e.model = KnotModel("exampleE", c, {1, {one(f), zero(f)}, 1, 0, Direction::UnknotToK}, std::nullopt,
                        {"P", "V^3"});
    e.expected_ideal = {"P", "V^3"};
    e.provenance = "hypothetical complex over R with d(1) = (V^3, P), iota = e1, (g, dplus) = (1, 0)";
  } else if (name == "k34_conjectural") {
    e.expected_ideal = {"L^3", "L^2*P", "L*P^2", "P^3", "(1+T1^-2)*P^2+L^2"};
    e.provenance = "conjectured ideal for the (3,4) torus knot; no complex is known";
    e.conjecture = true;
  } else {
    throw Error(ErrorCode::UnknownKnot, "unknown knot '" + std::string(name) + "'");
  }
  return e;
}

KnotModel catalog_model(std::string_view name) {
  CatalogEntry e = catalog_get(name);
  if (!e.model) throw Error(ErrorCode::UnknownKnot, "catalog entry '" + std::string(name) + "' has no knot model");
  return *e.model;
}

HopfSkeinData hopf_skein_data() {
  LaurentElement l = constant_L(BN), p = constant_P(BN);
  return {ChainComplex::free_module(BN, 0, 2), ChainComplex::free_module(BN, 0, 1), column(BN, {l + p, p}),
          row(BN, {zero(), one()}), row(BN, {one(), one()})};
}

KnotModel assemble_trefoil_from_skein() {
  HopfSkeinData d = hopf_skein_data();
  ChainComplex cone = mapping_cone({{0, d.x}}, d.unknot, d.hopf);
  LaurentMatrix basis(2, 2, zero());
  basis(0, 0) = one();
  basis(0, 1) = one();
  basis(1, 1) = one();
  ChainComplex c = change_basis(cone, 1, basis);
  return KnotModel("trefoil", c, {1, {zero(), one()}, 0, 1, Direction::UnknotToK}, -2, {"L", "P"});
}

std::vector<CheckRow> verify_skein_consistency() {
  std::vector<CheckRow> rows;
  HopfSkeinData d = hopf_skein_data();
  BaseChange b = builtin("B", Rational(1, 2));
  auto total_free = [&](const ChainComplex& c) {
    std::size_t n = 0;
    for (const auto& h : homology_over_valuation(c, b).degrees) n += h.free_rank;
    return n;
  };
  std::size_t t = total_free(assemble_trefoil_from_skein().complex);
  rows.push_back({"trefoil free rank at B(1/2)", t == 1, std::to_string(t)});
  std::size_t h = total_free(d.hopf);
  rows.push_back({"Hopf free rank", h == 2, std::to_string(h)});
  std::size_t u = total_free(d.unknot);
  rows.push_back({"unknot free rank", u == 1, std::to_string(u)});
  std::size_t a = total_free(mapping_cone({{0, laurent_identity(BN, 1)}}, d.unknot, d.unknot));
  rows.push_back({"cone of the identity is acyclic", a == 0, std::to_string(a)});
  LaurentElement sg = (d.s_g * d.x)(0, 0), sd = (d.s_delta * d.x)(0, 0);
  rows.push_back({"S_g after X is P", sg == constant_P(BN), to_named_string(sg)});
  rows.push_back({"S_delta after X is L", sd == constant_L(BN), to_named_string(sd)});
  bool same = assemble_trefoil_from_skein() == catalog_model("trefoil");
  rows.push_back({"assembled trefoil equals the catalog entry", same, same ? "identical" : "differs"});
  return rows;
}

}  // namespace concordia
