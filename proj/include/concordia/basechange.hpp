#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "concordia/field2.hpp"
#include "concordia/laurent.hpp"
#include "concordia/valuation.hpp"

namespace concordia {

/// A substitution T_i -> RationalFunction together with the valuation used
/// to measure the result.
class BaseChange {
 public:
  /// Throws ZeroElement for a vanishing image and DegenerateBaseChange when
  /// sigma(P) or sigma(V) is zero, unless allow_degenerate is set.
  BaseChange(std::string name, std::array<RationalFunction, 4> images, MonomialWeight weight,
             bool allow_degenerate = false);

  const std::string& name() const { return name_; }
  const std::array<RationalFunction, 4>& images() const { return images_; }
  const MonomialWeight& weight() const { return weight_; }
  bool reduced_valid() const { return images_[0] == images_[1]; }
  bool nonorientable_valid() const { return images_[0].is_one(); }
  bool degenerate() const { return sigma_P_.is_zero() || sigma_V_.is_zero(); }

  /// BN elements require a reduced-valid substitution (NotReducedValid).
  RationalFunction apply(const LaurentElement& a) const;
  RationalFunction apply(const LaurentFraction& a) const;

  const RationalFunction& sigma_P() const { return sigma_P_; }
  const RationalFunction& sigma_V() const { return sigma_V_; }

  /// (ord sigma(P), ord sigma(V)); DegenerateBaseChange if either vanishes.
  std::pair<Value, Value> pi_lambda() const;
  Value ord(const RationalFunction& f) const { return ord_rf(f, weight_); }

  std::string describe() const;

 private:
  std::string name_;
  std::array<RationalFunction, 4> images_;
  MonomialWeight weight_;
  RationalFunction sigma_P_;
  RationalFunction sigma_V_;
};

/// Built-in substitutions A, B (needs r in (0,1]), C, Cprime, D.
BaseChange builtin(std::string_view name, std::optional<Rational> r = std::nullopt);

}  // namespace concordia
