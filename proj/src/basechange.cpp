#include "concordia/basechange.hpp"

#include <algorithm>
#include <map>

#include "concordia/error.hpp"

namespace concordia {

BaseChange::BaseChange(std::string name, std::array<RationalFunction, 4> images, MonomialWeight weight,
                       bool allow_degenerate)
    : name_(std::move(name)), images_(std::move(images)), weight_(std::move(weight)) {
  for (int i = 0; i < 4; ++i)
    if (images_[i].is_zero())
      throw Error(ErrorCode::ZeroElement, "image of T" + std::to_string(i) + " is zero");
  sigma_P_ = apply(constant_P(Ring::Full));
  sigma_V_ = apply(constant_V(Ring::Full));
  if (degenerate() && !allow_degenerate)
    throw Error(ErrorCode::DegenerateBaseChange,
                "sigma(P) or sigma(V) vanishes for base change '" + name_ + "'");
}

RationalFunction BaseChange::apply(const LaurentElement& a) const {
  if (a.ring() == Ring::BN && !reduced_valid())
    throw Error(ErrorCode::NotReducedValid,
                "base change '" + name_ + "' does not identify T0 with T1, so it is undefined on S_BN");
  if (a.is_zero()) return RationalFunction();
  // Clear all negative exponents at once: with m_i <= e_i <= M_i (and m_i <= 0 <= M_i),
  //   (n/d)^e = n^(e - m) d^(M - e) / (n^-m d^M).
  std::array<int, 4> lo{0, 0, 0, 0}, hi{0, 0, 0, 0};
  for (const auto& e : a.terms())
    for (int i = 0; i < 4; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  std::array<std::map<unsigned, Poly2>, 4> npow, dpow;
  auto power = [](std::map<unsigned, Poly2>& cache, const Poly2& base, unsigned k) -> const Poly2& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return cache.emplace(k, base.pow(k)).first->second;
  };
  Poly2 num;
  for (const auto& e : a.terms()) {
    Poly2 term = Poly2::one();
    for (int i = 0; i < 4; ++i) {
      if (lo[i] == 0 && hi[i] == 0) continue;
      const RationalFunction& img = images_[i];
      term = term * power(npow[i], img.numerator(), static_cast<unsigned>(e[i] - lo[i]));
      if (!img.denominator().is_one())
        term = term * power(dpow[i], img.denominator(), static_cast<unsigned>(hi[i] - e[i]));
    }
    num += term;
  }
  Poly2 den = Poly2::one();
  for (int i = 0; i < 4; ++i) {
    const RationalFunction& img = images_[i];
    if (lo[i] != 0) den = den * power(npow[i], img.numerator(), static_cast<unsigned>(-lo[i]));
    if (hi[i] != 0 && !img.denominator().is_one())
      den = den * power(dpow[i], img.denominator(), static_cast<unsigned>(hi[i]));
  }
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction BaseChange::apply(const LaurentFraction& a) const {
  return apply(a.numerator()) / apply(a.denominator());
}

std::pair<Value, Value> BaseChange::pi_lambda() const {
  if (degenerate())
    throw Error(ErrorCode::DegenerateBaseChange, "base change '" + name_ + "' has sigma(P) = 0 or sigma(V) = 0");
  return {ord(sigma_P_), ord(sigma_V_)};
}

std::string BaseChange::describe() const {
  std::string out = name_ + ":";
  for (int i = 0; i < 4; ++i) out += " T" + std::to_string(i) + " -> " + images_[i].to_string() + ";";
  out += " " + weight_.to_string();
  return out;
}

BaseChange builtin(std::string_view name, std::optional<Rational> r) {
  auto rf = [](const char* s) { return parse_rational_function(s); };
  Value quarter = Value::scalar(Rational(1, 4));
  if (name == "A") {
    RationalFunction t1 = rf("1 + q1*x");
    return BaseChange("A", {t1, t1, rf("1 + q2*x"), rf("1 + q3*x")},
                      MonomialWeight(ValueKind::Scalar, {{Var::x, quarter}}));
  }
  if (name == "B") {
    if (!r) throw Error(ErrorCode::MissingParameter, "example B needs a parameter r in (0,1]");
    if (*r <= Rational(0) || *r > Rational(1))
      throw Error(ErrorCode::MissingParameter, "example B needs r in (0,1], got " + r->to_string());
    RationalFunction a = rf("1 + q1*u"), b = rf("1 + q2*x");
    return BaseChange("B(r=" + r->to_string() + ")", {a, a, b, b},
                      MonomialWeight(ValueKind::Scalar,
                                     {{Var::x, quarter}, {Var::u, Value::scalar(*r * Rational(1, 4))}}));
  }
  if (name == "C") {
    RationalFunction a = rf("1 + y"), b = rf("1 + x");
    return BaseChange("C", {a, a, b, b},
                      MonomialWeight(ValueKind::Lex, {{Var::x, Value::lex(Rational(1, 4), 0)},
                                                      {Var::y, Value::lex(0, Rational(1, 4))}}));
  }
  if (name == "Cprime") {
    RationalFunction a = rf("1 + y");
    return BaseChange("Cprime", {a, a, RationalFunction::one(), RationalFunction::one()},
                      MonomialWeight(ValueKind::Scalar, {{Var::y, quarter}}), true);
  }
  if (name == "D") {
    RationalFunction b = rf("1 + x");
    return BaseChange("D", {RationalFunction::one(), RationalFunction::one(), b, b},
                      MonomialWeight(ValueKind::Scalar, {{Var::x, quarter}}));
  }
  throw Error(ErrorCode::UnknownExample, "unknown example '" + std::string(name) + "' (expected A, B, C, Cprime, D)");
}

}  // namespace concordia
