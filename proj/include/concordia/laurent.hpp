#pragma once

// Laurent polynomials in T0..T3 over F2 (the ring R) and its quotient S_BN
// where T0 = T1.  S_BN elements are stored with every T0 exponent folded
// into T1, so both rings share one representation distinguished by a tag.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "concordia/field2.hpp"

namespace concordia {

enum class Ring : std::uint8_t { Full, BN };

std::string_view ring_name(Ring r);
Ring ring_from_name(std::string_view name);

using LaurentExponents = std::array<std::int32_t, 4>;

class LaurentElement {
 public:
  explicit LaurentElement(Ring ring) : ring_(ring) {}

  static LaurentElement zero(Ring ring) { return LaurentElement(ring); }
  static LaurentElement one(Ring ring);
  static LaurentElement monomial(Ring ring, LaurentExponents e);
  /// T_i^e; in BN, T0 is read as T1.
  static LaurentElement variable(Ring ring, int i, int e = 1);
  static LaurentElement from_terms(Ring ring, std::vector<LaurentExponents> terms);

  Ring ring() const { return ring_; }
  const std::vector<LaurentExponents>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentElement operator+(const LaurentElement& o) const;
  LaurentElement& operator+=(const LaurentElement& o) { return *this = *this + o; }
  LaurentElement operator*(const LaurentElement& o) const;
  LaurentElement& operator*=(const LaurentElement& o) { return *this = *this * o; }
  /// Negative powers are allowed only for monomials (the units of the ring).
  LaurentElement pow(int n) const;

  bool operator==(const LaurentElement&) const = default;

  std::string to_string() const;

 private:
  void check_same_ring(const LaurentElement& o) const;

  Ring ring_;
  std::vector<LaurentExponents> terms_;  // sorted ascending, unique
};

LaurentElement laurent_add(const LaurentElement& a, const LaurentElement& b);
LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b);

/// The quotient map R -> S_BN identifying T0 with T1.
LaurentElement quotient_to_bn(const LaurentElement& a);

LaurentElement constant_P(Ring ring);
LaurentElement constant_Q(Ring ring);
/// V = P + T0^2 + T0^-2, the finger-move / positive-twist multiplier.
LaurentElement constant_V(Ring ring);
/// L = T1^2 + T1^-2 + P; equals V in S_BN.
LaurentElement constant_L(Ring ring);
/// V_xi = xi*P + T0^2 + T0^-2.
LaurentElement xi_twisted_V(const LaurentElement& xi);

struct ClearedLaurent {
  Poly2 polynomial;            // in variables T0..T3
  LaurentExponents multiplier;  // non-negative; a * T^multiplier == polynomial
};

/// Multiplies by the smallest monomial making every exponent non-negative.
ClearedLaurent clear_denominators(const LaurentElement& a);
/// Inverse bridge: a polynomial in T0..T3 (times T^-shift) as a Laurent element.
LaurentElement from_polynomial(Ring ring, const Poly2& p, const LaurentExponents& shift = {});

/// a / b when the quotient is again a Laurent polynomial.
std::optional<LaurentElement> laurent_divide_exact(const LaurentElement& a, const LaurentElement& b);
/// A gcd, normalized to have no monomial factor (gcd is defined up to units).
LaurentElement laurent_gcd(const LaurentElement& a, const LaurentElement& b);

/// Element num/den of Frac(R) or Frac(S_BN), kept with gcd(num, den) = 1 and
/// the denominator free of monomial factors.
class LaurentFraction {
 public:
  explicit LaurentFraction(Ring ring) : num_(ring), den_(LaurentElement::one(ring)) {}
  LaurentFraction(LaurentElement num);  // NOLINT(google-explicit-constructor)
  LaurentFraction(LaurentElement num, LaurentElement den);

  Ring ring() const { return num_.ring(); }
  const LaurentElement& numerator() const { return num_; }
  const LaurentElement& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  LaurentFraction operator+(const LaurentFraction& o) const;
  LaurentFraction operator*(const LaurentFraction& o) const;
  LaurentFraction operator/(const LaurentFraction& o) const;
  LaurentFraction inverse() const;
  LaurentFraction pow(int n) const;

  bool operator==(const LaurentFraction&) const = default;

  std::string to_string() const;

 private:
  LaurentElement num_;
  LaurentElement den_;
};

/// Parses the Laurent text syntax ("T1*T2^-1 + P^2*L^-1", macros P Q V L).
/// Division by non-monomials yields a proper fraction.
LaurentFraction parse_laurent_fraction(std::string_view text, Ring ring);
/// As above, but the result must be a Laurent polynomial.
LaurentElement parse_laurent(std::string_view text, Ring ring);

/// Writes a as P^i * L^j (BN) or P^i * V^j (FULL) when it has that form,
/// otherwise falls back to to_string().  The output parses back to a.
std::string to_named_string(const LaurentElement& a);
std::string to_named_string(const LaurentFraction& a);

}  // namespace concordia
