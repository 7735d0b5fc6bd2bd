#pragma once

// Value groups Q and Q x Q (lexicographic) and the weighted-monomial
// valuations used by every base change.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "concordia/field2.hpp"

namespace concordia {

class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(Backend v) : v_(std::move(v)) {}

  /// Accepts "p", "p/q", "-p/q".
  static Rational parse(std::string_view text);

  const Backend& backend() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const;
  int sign() const { return v_.sign(); }
  /// Numerator and denominator as 64-bit integers; throws Overflow if too big.
  long long num() const;
  long long den() const;
  long long floor() const;
  long long ceil() const;

  Rational operator+(const Rational& o) const { return Rational(Backend(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(Backend(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(Backend(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(Backend(-v_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  /// "p/q", or "p" for integers.
  std::string to_string() const;

 private:
  Backend v_;
};

enum class ValueKind : std::uint8_t { Scalar, Lex };

/// Element of Q or of Q x Q with the first coordinate most significant.
class Value {
 public:
  Value() = default;
  static Value scalar(Rational a) { return Value(ValueKind::Scalar, std::move(a), Rational()); }
  static Value lex(Rational a, Rational b) { return Value(ValueKind::Lex, std::move(a), std::move(b)); }
  static Value zero(ValueKind kind) { return Value(kind, Rational(), Rational()); }

  ValueKind kind() const { return kind_; }
  const Rational& first() const { return a_; }
  const Rational& second() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_positive() const { return *this > zero(kind_); }

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator-() const { return Value(kind_, -a_, -b_); }
  Value operator*(long long n) const { return Value(kind_, a_ * n, b_ * n); }

  /// Throws ValueGroupMismatch when kinds differ.
  std::strong_ordering operator<=>(const Value& o) const;
  bool operator==(const Value& o) const { return (*this <=> o) == 0; }

  /// "1/2" or "(0, 1)".
  std::string to_string() const;

 private:
  Value(ValueKind k, Rational a, Rational b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
  void check_kind(const Value& o) const;

  ValueKind kind_ = ValueKind::Scalar;
  Rational a_;
  Rational b_;
};

/// Weights on the valuation variables x, y, u; every other variable weighs 0.
class MonomialWeight {
 public:
  explicit MonomialWeight(ValueKind kind = ValueKind::Scalar);
  MonomialWeight(ValueKind kind, std::initializer_list<std::pair<Var, Value>> weights);

  ValueKind kind() const { return kind_; }
  /// Assigned weights must be strictly positive and of the weight's kind.
  void set(Var v, const Value& w);
  const Value& operator[](Var v) const { return w_[index(v)]; }
  Value weight(const Monomial& m) const;

  std::string to_string() const;

 private:
  ValueKind kind_;
  std::array<Value, kNumVars> w_;
};

/// Minimal weight over the support; ZeroElement for p = 0.
Value ord_poly(const Poly2& p, const MonomialWeight& w);
/// ord(numerator) - ord(denominator).
Value ord_rf(const RationalFunction& f, const MonomialWeight& w);
/// Sum of the terms of minimal weight.
Poly2 leading_form(const Poly2& p, const MonomialWeight& w);

}  // namespace concordia
