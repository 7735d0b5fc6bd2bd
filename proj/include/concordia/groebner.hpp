#pragma once

// Buchberger's algorithm over F2 in the variables T0..T3, U0..U3 with the
// graded reverse lexicographic order T0 > T1 > T2 > T3 > U0 > ... > U3.

#include <optional>
#include <vector>

#include "concordia/field2.hpp"

namespace concordia {

/// Negative, zero or positive as a is smaller, equal or larger than b.
int grevlex_compare(const Monomial& a, const Monomial& b);
unsigned grevlex_degree(const Monomial& m);

class GroebnerBasis {
 public:
  /// Reduced basis of the ideal generated by gens.  A cap on the degree of
  /// basis elements may be given explicitly or through the environment
  /// variable CONCORDIA_GB_MAXDEG; exceeding it throws GroebnerDegreeCap.
  static GroebnerBasis compute(const std::vector<Poly2>& gens, std::optional<unsigned> max_degree = std::nullopt);

  /// Sorted by increasing leading monomial.
  const std::vector<Poly2>& basis() const { return basis_; }
  Poly2 reduce(const Poly2& f) const;
  bool contains(const Poly2& f) const { return reduce(f).is_zero(); }
  bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_one(); }

  bool operator==(const GroebnerBasis&) const = default;

 private:
  std::vector<Poly2> basis_;
  std::vector<std::vector<Monomial>> sorted_;  // basis_ with terms in decreasing grevlex order
};

}  // namespace concordia
