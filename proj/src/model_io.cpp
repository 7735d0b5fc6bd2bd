#include "concordia/model_io.hpp"

#include <json.hpp>

#include "concordia/error.hpp"

namespace concordia {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidComplex, "model file: " + what); }

LaurentElement entry(const ordered_json& j, Ring ring) {
  if (!j.is_string()) bad("matrix and vector entries must be strings");
  return parse_laurent(j.get<std::string>(), ring);
}

int as_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

KnotModel ModelFile::model() const {
  if (!complex) bad("'" + name + "' has no complex");
  if (!cycle) bad("'" + name + "' has no distinguished cycle");
  return KnotModel(name, *complex, *cycle, signature, expected_ideal);
}

namespace {

ModelFile from_json(const ordered_json& j);

}  // namespace

ModelFile parse_model_file(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const ordered_json::exception& e) {
    bad(e.what());
  }
}

namespace {

int degree_key(const std::string& key) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) bad("'" + key + "' is not a degree");
  return k;
}

ModelFile from_json(const ordered_json& j) {
  if (!j.is_object()) bad("top level must be an object");
  ModelFile f;
  f.name = j.value("name", std::string("model"));
  f.ring = ring_from_name(j.value("ring", std::string("BN")));
  if (j.contains("signature")) f.signature = as_int(j["signature"], "signature");
  if (j.contains("expected_ideal"))
    for (const auto& g : j["expected_ideal"]) f.expected_ideal.push_back(g.get<std::string>());
  f.conjecture = j.value("conjecture", false);
  f.provenance = j.value("provenance", std::string());
  if (!j.contains("degrees")) return f;

  const auto& degs = j["degrees"];
  if (!degs.is_array() || degs.empty()) bad("'degrees' must be a non-empty list");
  std::vector<int> d;
  for (const auto& x : degs) d.push_back(as_int(x, "degree"));
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] != d[i - 1] + 1) bad("'degrees' must be contiguous and increasing");
  int lo = d.front();
  std::vector<std::size_t> ranks;
  for (int k : d) {
    const auto& r = j["ranks"];
    std::string key = std::to_string(k);
    if (!r.is_object() || !r.contains(key)) bad("missing rank for degree " + key);
    int v = as_int(r[key], "rank");
    if (v < 0) bad("negative rank");
    ranks.push_back(static_cast<std::size_t>(v));
  }
  std::vector<LaurentMatrix> diffs;
  const ordered_json empty = ordered_json::object();
  const auto& bmap = j.contains("boundaries") ? j["boundaries"] : empty;
  for (std::size_t i = 1; i < d.size(); ++i) {
    std::size_t rows = ranks[i], cols = ranks[i - 1];
    LaurentMatrix m(rows, cols, LaurentElement::zero(f.ring));
    std::string key = std::to_string(d[i]);
    if (bmap.contains(key)) {
      const auto& images = bmap[key];
      if (!images.is_array() || images.size() != cols)
        bad("boundaries['" + key + "'] needs one row per generator of degree " + std::to_string(d[i - 1]));
      for (std::size_t c = 0; c < cols; ++c) {
        if (!images[c].is_array() || images[c].size() != rows)
          bad("boundaries['" + key + "'] rows need " + std::to_string(rows) + " entries");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = entry(images[c][r], f.ring);
      }
    }
    diffs.push_back(std::move(m));
  }
  for (const auto& [key, _] : bmap.items()) {
    int k = degree_key(key);
    if (k <= d.front() || k > d.back()) bad("boundary into degree " + key + " is outside the complex");
  }
  f.complex = ChainComplex(f.ring, lo, std::move(ranks), std::move(diffs));

  if (j.contains("cycle")) {
    const auto& c = j["cycle"];
    DistinguishedCycle cyc;
    cyc.degree = as_int(c.at("degree"), "cycle degree");
    for (const auto& e : c.at("vector")) cyc.vector.push_back(entry(e, f.ring));
    cyc.genus = as_int(c.value("genus", ordered_json(0)), "genus");
    cyc.dplus = as_int(c.value("dplus", ordered_json(0)), "dplus");
    cyc.direction = direction_from_name(c.value("direction", std::string("unknot-to-K")));
    f.complex->check_cycle(cyc);
    f.cycle = cyc;
  }
  return f;
}

}  // namespace

std::string to_json(const ModelFile& f) {
  ordered_json j;
  j["name"] = f.name;
  j["ring"] = std::string(ring_name(f.ring));
  if (f.complex) {
    const ChainComplex& c = *f.complex;
    j["degrees"] = ordered_json::array();
    j["ranks"] = ordered_json::object();
    for (int k = c.lo(); k <= c.hi(); ++k) {
      j["degrees"].push_back(k);
      j["ranks"][std::to_string(k)] = c.rank(k);
    }
    j["boundaries"] = ordered_json::object();
    for (int k = c.lo() + 1; k <= c.hi(); ++k) {
      LaurentMatrix d = c.differential(k);
      if (d.is_zero_matrix()) continue;
      ordered_json images = ordered_json::array();
      for (std::size_t col = 0; col < d.cols(); ++col) {
        ordered_json rowj = ordered_json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) rowj.push_back(to_named_string(d(r, col)));
        images.push_back(rowj);
      }
      j["boundaries"][std::to_string(k)] = images;
    }
  }
  if (f.cycle) {
    ordered_json c;
    c["degree"] = f.cycle->degree;
    c["vector"] = ordered_json::array();
    for (const auto& e : f.cycle->vector) c["vector"].push_back(to_named_string(e));
    c["genus"] = f.cycle->genus;
    c["dplus"] = f.cycle->dplus;
    c["direction"] = std::string(direction_name(f.cycle->direction));
    j["cycle"] = c;
  }
  if (f.signature) j["signature"] = *f.signature;
  if (!f.expected_ideal.empty()) j["expected_ideal"] = f.expected_ideal;
  if (f.conjecture) j["conjecture"] = true;
  if (!f.provenance.empty()) j["provenance"] = f.provenance;
  return j.dump(2) + "\n";
}

ModelFile to_model_file(const KnotModel& k) {
  ModelFile f;
  f.name = k.name;
  f.ring = k.ring();
  f.complex = k.complex;
  f.cycle = k.cycle;
  f.signature = k.signature;
  f.expected_ideal = k.expected_ideal;
  return f;
}

ModelFile to_model_file(const CatalogEntry& e) {
  ModelFile f;
  if (e.model) f = to_model_file(*e.model);
  f.name = e.name;
  f.ring = e.ring;
  f.complex = e.complex;
  f.expected_ideal = e.expected_ideal;
  f.conjecture = e.conjecture;
  f.provenance = e.provenance;
  return f;
}

}  // namespace concordia
