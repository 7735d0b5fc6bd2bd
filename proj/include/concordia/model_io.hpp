#pragma once

// JSON knot-model files:
//   { "name": "trefoil", "ring": "BN", "degrees": [0,1], "ranks": {"0":1,"1":2},
//     "boundaries": {"1": [["L","P"]]},
//     "cycle": {"degree":1, "vector":["0","1"], "genus":0, "dplus":1, "direction":"unknot-to-K"} }
// boundaries[k] has one row per generator of C^(k-1), listing its image in C^k.
// Optional keys: "signature", "expected_ideal" (list of generator texts),
// "conjecture", "provenance".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concordia/catalog.hpp"
#include "concordia/homalg.hpp"
#include "concordia/invariants.hpp"

namespace concordia {

struct ModelFile {
  std::string name;
  Ring ring = Ring::BN;
  std::optional<ChainComplex> complex;
  std::optional<DistinguishedCycle> cycle;
  std::optional<int> signature;
  std::vector<std::string> expected_ideal;
  bool conjecture = false;
  std::string provenance;

  /// InvalidComplex when there is no complex or no cycle.
  KnotModel model() const;
};

/// ParseError on malformed JSON, InvalidComplex on inconsistent data.
ModelFile parse_model_file(std::string_view text);
std::string to_json(const ModelFile& f);

ModelFile to_model_file(const KnotModel& k);
ModelFile to_model_file(const CatalogEntry& e);

}  // namespace concordia
