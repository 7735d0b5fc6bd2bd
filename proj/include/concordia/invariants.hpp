#pragma once

// From a knot model (complex + distinguished cycle) to the ideals, the
// concordance homomorphisms f_sigma, f_r, f_plus and the derived bounds.

#include <optional>
#include <string>
#include <vector>

#include "concordia/basechange.hpp"
#include "concordia/homalg.hpp"
#include "concordia/ideals.hpp"
#include "concordia/valuation.hpp"

namespace concordia {

struct KnotModel {
  std::string name;
  ChainComplex complex;
  DistinguishedCycle cycle;
  std::optional<int> signature;
  std::vector<std::string> expected_ideal;  // generator texts, empty if unknown

  /// Checks the cycle against the complex (InvalidComplex).
  KnotModel(std::string name, ChainComplex complex, DistinguishedCycle cycle, std::optional<int> signature = {},
            std::vector<std::string> expected_ideal = {});

  Ring ring() const { return complex.ring(); }
  bool operator==(const KnotModel&) const = default;
};

/// (-chi + c_plus - c_minus) / 2.
Rational adjusted_genus(int chi, int c_plus, int c_minus);
/// g_a + delta/2 - nu/4; NonIntegral unless this is an integer.
long long eta(const Rational& g_a, int delta, int nu);

/// The ideal over the valuation ring of sigma.  sigma must be reduced-valid
/// (NotReducedValid) and non-degenerate (DegenerateBaseChange).
ValuationIdeal znat(const KnotModel& k, const BaseChange& sigma);
/// The ideal over the model's own ring (S_BN or R).  Only presentations whose
/// homology in the cycle degree is free of rank one or S^2 modulo a single
/// relation are handled; others throw UnsupportedPresentation.
FractionalIdeal znat_ring(const KnotModel& k);

Value f_sigma(const KnotModel& k, const BaseChange& sigma);
/// f_sigma for Example B at parameter r.
Rational f_r(const KnotModel& k, const Rational& r);
/// Second coordinate of f_sigma for Example C; IntegrityError if the first
/// coordinate is not zero.
Rational f_plus(const KnotModel& k);

struct ProfileSegment {
  Rational from, to;
  Rational intercept, slope;  // f_r = intercept + slope * r on [from, to]
  std::size_t support = 0;    // number of evaluated samples on the segment
};

struct Profile {
  std::vector<std::pair<Rational, Rational>> samples;  // (r, f_r), sorted by r, includes refinement points
  std::vector<ProfileSegment> segments;
  std::vector<std::pair<Rational, Rational>> unresolved;  // open intervals with no certified description
  /// Heuristic: |slope| <= 4 * (largest u-degree in the substituted boundaries).
  Rational slope_bound;
  bool slopes_within_bound = true;
};

/// Samples must be distinct and lie in (0, 1].  depth bounds the number of
/// extra evaluations used to locate each breakpoint.
Profile f_profile(const KnotModel& k, std::vector<Rational> samples, int depth = 4);

/// Multiples of step in (0, 1], e.g. "1/8..1"; or a comma separated list.
std::vector<Rational> parse_samples(const std::string& text);

struct BoundRow {
  std::string name;
  std::string statement;  // e.g. "slice genus >= 1/2"; empty when unavailable
  std::string error;      // error name when the row could not be produced
};

struct UnknottingBound {
  Value tau;    // largest torsion ord over all degrees (0 when torsion free)
  Value lambda;
  /// tau / lambda for scalar value groups, else the least n with n*lambda >= tau.
  Rational bound;
  /// (n, result) for the annihilation test of rank-one torsion by <P, V>^n
  /// (V read as L in S_BN); empty when no rank-one torsion degree exists.
  std::vector<std::pair<int, bool>> annihilation;
};

UnknottingBound unknotting_bound(const KnotModel& k, const BaseChange& sigma, int max_power = 3);

std::vector<BoundRow> bounds(const KnotModel& k, const BaseChange& sigma);

/// Tensor of the complexes and cycles; genus and dplus add.  Cycles must
/// point the same way (DirectionMismatch) and live over the same ring.
KnotModel connected_sum(const KnotModel& a, const KnotModel& b);

/// Trivial kernel over the fraction field.
bool map_injectivity(const LaurentMatrix& f);

/// Human-readable report used by the CLI `invariants` command.
std::string invariant_report(const KnotModel& k, const BaseChange& sigma);

}  // namespace concordia
