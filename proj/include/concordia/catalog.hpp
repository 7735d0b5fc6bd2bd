#pragma once

// Built-in knot models and the skein data the trefoil is assembled from.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concordia/homalg.hpp"
#include "concordia/invariants.hpp"

namespace concordia {

struct CatalogEntry {
  std::string name;
  Ring ring = Ring::BN;
  std::optional<ChainComplex> complex;  // absent for ideal-only entries
  std::optional<KnotModel> model;       // present when there is a distinguished cycle
  std::vector<std::string> expected_ideal;
  std::string provenance;
  bool conjecture = false;
};

std::vector<std::string> catalog_names();
/// Throws UnknownKnot.
CatalogEntry catalog_get(std::string_view name);
/// The entry's model; UnknownKnot if the entry has no distinguished cycle.
KnotModel catalog_model(std::string_view name);

struct HopfSkeinData {
  ChainComplex hopf;     // S^2 with zero differential, generators (beta+, beta-)
  ChainComplex unknot;   // S
  LaurentMatrix x;       // S -> S^2, (L + P, P)
  LaurentMatrix s_g;     // S^2 -> S: beta+ -> 0, beta- -> alpha
  LaurentMatrix s_delta; // S^2 -> S: beta+ -> alpha, beta- -> alpha
};

HopfSkeinData hopf_skein_data();

/// Cone of X followed by the basis change e1 = beta+, e2 = beta+ + beta-.
KnotModel assemble_trefoil_from_skein();

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Rank bookkeeping of the skein sequences and the S_g / S_delta identities.
std::vector<CheckRow> verify_skein_consistency();

}  // namespace concordia
