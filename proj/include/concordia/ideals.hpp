#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "concordia/basechange.hpp"
#include "concordia/groebner.hpp"
#include "concordia/homalg.hpp"
#include "concordia/laurent.hpp"
#include "concordia/valuation.hpp"

namespace concordia {

/// Finitely generated fractional ideal of R or S_BN.
class FractionalIdeal {
 public:
  /// Throws ZeroElement when every generator is zero.  Zero generators are
  /// dropped; labels (if given) are the display names of the generators.
  FractionalIdeal(Ring ring, std::vector<LaurentFraction> gens, std::vector<std::string> labels = {});

  /// Comma separated generator list in the Laurent text syntax.
  static FractionalIdeal parse(std::string_view list, Ring ring);
  static FractionalIdeal unit(Ring ring);

  Ring ring() const { return ring_; }
  const std::vector<LaurentFraction>& generators() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const LaurentFraction& f) const;
  bool contains(const FractionalIdeal& other) const;
  bool same_as(const FractionalIdeal& other) const { return contains(other) && other.contains(*this); }
  bool is_unit_ideal() const { return contains(LaurentFraction(LaurentElement::one(ring_))); }

  /// The Groebner basis of the honest ideal B*I (B a common denominator),
  /// saturated by the T variables; exposed for tests.
  const GroebnerBasis& groebner() const;

  std::string to_string() const;

 private:
  struct Cache;
  const Cache& cache() const;

  Ring ring_;
  std::vector<LaurentFraction> gens_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;  // built on first use, shared by copies
};

bool membership(const LaurentFraction& f, const FractionalIdeal& ideal);
/// All pairwise products; RingMismatch across rings.
FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal ideal_power(const FractionalIdeal& a, int n);

/// S^2 / <(a1, a2)> as a fractional ideal: e1 -> a2/g, e2 -> a1/g with
/// g = gcd(a1, a2).  Other shapes throw UnsupportedPresentation.
FractionalIdeal module_quotient_rank1(const std::vector<std::vector<LaurentElement>>& relations);

/// (g, d) in [0, gmax] x [0, dmax] with P^g V^d in the ideal (V read as L in S_BN).
std::vector<std::pair<int, int>> g_region(const FractionalIdeal& ideal, int gmax, int dmax);

/// Rewrites the generator names u -> L, w -> P of the comparison ideal.
std::string ae_rewrite(std::string_view text);

/// Principal fractional ideal of a valuation ring, kept as one generator of
/// minimal ord.
class ValuationIdeal {
 public:
  ValuationIdeal(std::vector<RationalFunction> gens, MonomialWeight weight);
  /// DegenerateBaseChange for degenerate sigma.
  static ValuationIdeal over(const BaseChange& sigma, std::vector<RationalFunction> gens);

  const RationalFunction& generator() const { return gen_; }
  const MonomialWeight& weight() const { return weight_; }
  const Value& ord() const { return ord_; }

  std::string to_string() const;

 private:
  RationalFunction gen_;
  MonomialWeight weight_;
  Value ord_;
};

Value ideal_ord(const ValuationIdeal& i);
ValuationIdeal ideal_product(const ValuationIdeal& a, const ValuationIdeal& b);

/// <c^-1> for the free coefficient c of an unknot-to-K cycle class.
ValuationIdeal ideal_quotient(const HomologySummary& h, const BaseChange& sigma);

}  // namespace concordia
