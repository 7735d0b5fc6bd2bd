#pragma once

// Sparse multivariate polynomials over F2 and their fraction field.
//
// Coefficients live in F2, so a polynomial is just a set of monomials and
// addition is symmetric difference.  All variables of the project share one
// fixed universe; Laurent behaviour is handled in laurent.hpp.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace concordia {

enum class Var : std::uint8_t {
  q1, q2, q3, x, y, u,
  T0, T1, T2, T3,
  U0, U1, U2, U3,
};

inline constexpr std::size_t kNumVars = 14;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

using Exponent = std::uint16_t;

struct Monomial {
  std::array<Exponent, kNumVars> exps{};

  static Monomial var(Var v, unsigned e = 1);

  Exponent operator[](Var v) const { return exps[index(v)]; }
  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Throws Overflow when an exponent leaves the Exponent range.
  Monomial operator*(const Monomial& other) const;
  /// Precondition: divides(other) is false only if the caller checked.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
};

class Poly2 {
 public:
  Poly2() = default;

  static Poly2 one();
  static Poly2 var(Var v, unsigned e = 1);
  static Poly2 monomial(const Monomial& m);
  /// Builds a polynomial from an arbitrary multiset of monomials; repeated
  /// monomials cancel in pairs.
  static Poly2 from_terms(std::vector<Monomial> terms);

  /// Terms sorted ascending in lexicographic exponent order.
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lexicographically largest term.
  const Monomial& lead() const { return terms_.back(); }

  unsigned degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  unsigned total_degree() const;
  /// Componentwise minimum over all terms: the largest monomial dividing p.
  Monomial monomial_content() const;

  Poly2 operator+(const Poly2& other) const;
  Poly2& operator+=(const Poly2& other);
  Poly2 operator*(const Poly2& other) const;
  Poly2 operator*(const Monomial& m) const;
  Poly2 pow(unsigned n) const;
  /// Divides every term by m; m must divide every term.
  Poly2 divide_by_monomial(const Monomial& m) const;

  bool operator==(const Poly2&) const = default;

  std::string to_string() const;

 private:
  explicit Poly2(std::vector<Monomial> sorted_unique) : terms_(std::move(sorted_unique)) {}
  std::vector<Monomial> terms_;
};

Poly2 poly_add(const Poly2& a, const Poly2& b);
Poly2 poly_mul(const Poly2& a, const Poly2& b);
/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly2> poly_divide_exact(const Poly2& a, const Poly2& b);
/// Greatest common divisor; gcd(p, 0) = p.
Poly2 poly_gcd(const Poly2& a, const Poly2& b);

/// Element of Frac(F2[vars]) kept with gcd(numerator, denominator) = 1.
/// Over F2 the only unit is 1, so the reduced pair is unique and equality
/// is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly2::one()) {}
  RationalFunction(Poly2 num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly2 num, Poly2 den);

  static RationalFunction one() { return RationalFunction(Poly2::one()); }
  static RationalFunction var(Var v) { return RationalFunction(Poly2::var(v)); }

  const Poly2& numerator() const { return num_; }
  const Poly2& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction inverse() const;
  RationalFunction pow(int n) const;

  bool operator==(const RationalFunction&) const = default;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Poly2 num, Poly2 den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly2 num_;
  Poly2 den_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_inv(const RationalFunction& a);

/// Parses expressions such as "1+q1*x", "y^4/(1+y^2)" over the variable
/// universe.  Integers are read modulo 2.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace concordia
