#include "concordia/laurent.hpp"

#include <algorithm>
#include <climits>

#include "concordia/error.hpp"
#include "concordia/expr.hpp"

namespace concordia {

namespace {

void fold_bn(LaurentExponents& e) {
  e[1] += e[0];
  e[0] = 0;
}

std::vector<LaurentExponents> normalize(std::vector<LaurentExponents> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<LaurentExponents> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

std::int32_t checked_sum(std::int64_t a, std::int64_t b) {
  std::int64_t s = a + b;
  if (s > INT32_MAX / 2 || s < INT32_MIN / 2) throw Error(ErrorCode::Overflow, "Laurent exponent overflow");
  return static_cast<std::int32_t>(s);
}

std::string monomial_string(const LaurentExponents& e) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "T" + std::to_string(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Var t_var(int i) { return static_cast<Var>(index(Var::T0) + i); }

}  // namespace

std::string_view ring_name(Ring r) { return r == Ring::Full ? "FULL" : "BN"; }

Ring ring_from_name(std::string_view name) {
  if (name == "FULL" || name == "Full" || name == "full" || name == "R") return Ring::Full;
  if (name == "BN" || name == "bn" || name == "S_BN") return Ring::BN;
  throw Error(ErrorCode::ParseError, "unknown ring '" + std::string(name) + "'");
}

LaurentElement LaurentElement::one(Ring ring) { return monomial(ring, {0, 0, 0, 0}); }

LaurentElement LaurentElement::monomial(Ring ring, LaurentExponents e) {
  if (ring == Ring::BN) fold_bn(e);
  LaurentElement a(ring);
  a.terms_.push_back(e);
  return a;
}

LaurentElement LaurentElement::variable(Ring ring, int i, int e) {
  LaurentExponents ex{0, 0, 0, 0};
  ex.at(static_cast<std::size_t>(i)) = e;
  return monomial(ring, ex);
}

LaurentElement LaurentElement::from_terms(Ring ring, std::vector<LaurentExponents> terms) {
  if (ring == Ring::BN)
    for (auto& e : terms) fold_bn(e);
  LaurentElement a(ring);
  a.terms_ = normalize(std::move(terms));
  return a;
}

bool LaurentElement::is_one() const {
  return terms_.size() == 1 && terms_[0] == LaurentExponents{0, 0, 0, 0};
}

void LaurentElement::check_same_ring(const LaurentElement& o) const {
  if (ring_ != o.ring_)
    throw Error(ErrorCode::RingMismatch, "operands live in different rings (FULL vs BN)");
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
  check_same_ring(o);
  LaurentElement out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(out.terms_));
  return out;
}

LaurentElement LaurentElement::operator*(const LaurentElement& o) const {
  check_same_ring(o);
  std::vector<LaurentExponents> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      LaurentExponents e;
      for (int i = 0; i < 4; ++i) e[i] = checked_sum(a[i], b[i]);
      prod.push_back(e);
    }
  LaurentElement out(ring_);
  out.terms_ = normalize(std::move(prod));
  return out;
}

LaurentElement LaurentElement::pow(int n) const {
  if (n < 0) {
    if (!is_monomial())
      throw Error(ErrorCode::NotInvertible, "negative power of a non-unit Laurent element " + to_string());
    LaurentExponents e = terms_[0];
    for (auto& x : e) x = -x;
    return monomial(ring_, e).pow(-n);
  }
  LaurentElement result = one(ring_);
  LaurentElement base = *this;
  unsigned k = static_cast<unsigned>(n);
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) {
      LaurentElement sq(ring_);
      for (const auto& e : base.terms_) {
        LaurentExponents d;
        for (int i = 0; i < 4; ++i) d[i] = checked_sum(e[i], e[i]);
        sq.terms_.push_back(d);
      }
      std::sort(sq.terms_.begin(), sq.terms_.end());
      base = std::move(sq);
    }
  }
  return result;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += monomial_string(*it);
  }
  return out;
}

LaurentElement laurent_add(const LaurentElement& a, const LaurentElement& b) { return a + b; }
LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b) { return a * b; }

LaurentElement quotient_to_bn(const LaurentElement& a) {
  return LaurentElement::from_terms(Ring::BN, a.terms());
}

LaurentElement constant_P(Ring ring) {
  return LaurentElement::from_terms(ring, {{0, 1, 1, 1}, {0, 1, -1, -1}, {0, -1, 1, -1}, {0, -1, -1, 1}});
}

LaurentElement constant_Q(Ring ring) {
  std::vector<LaurentExponents> terms;
  for (int j = 0; j < 4; ++j) {
    LaurentExponents a{0, 0, 0, 0}, b{0, 0, 0, 0};
    a[j] = 2;
    b[j] = -2;
    terms.push_back(a);
    terms.push_back(b);
  }
  return LaurentElement::from_terms(ring, terms);
}

LaurentElement constant_V(Ring ring) {
  return constant_P(ring) + LaurentElement::from_terms(ring, {{2, 0, 0, 0}, {-2, 0, 0, 0}});
}

LaurentElement constant_L(Ring ring) {
  return constant_P(ring) + LaurentElement::from_terms(ring, {{0, 2, 0, 0}, {0, -2, 0, 0}});
}

LaurentElement xi_twisted_V(const LaurentElement& xi) {
  Ring ring = xi.ring();
  return xi * constant_P(ring) + LaurentElement::from_terms(ring, {{2, 0, 0, 0}, {-2, 0, 0, 0}});
}

ClearedLaurent clear_denominators(const LaurentElement& a) {
  LaurentExponents shift{0, 0, 0, 0};
  for (const auto& e : a.terms())
    for (int i = 0; i < 4; ++i) shift[i] = std::max(shift[i], -e[i]);
  std::vector<Monomial> terms;
  terms.reserve(a.terms().size());
  for (const auto& e : a.terms()) {
    Monomial m;
    for (int i = 0; i < 4; ++i) m.exps[index(t_var(i))] = static_cast<Exponent>(e[i] + shift[i]);
    terms.push_back(m);
  }
  return {Poly2::from_terms(std::move(terms)), shift};
}

LaurentElement from_polynomial(Ring ring, const Poly2& p, const LaurentExponents& shift) {
  std::vector<LaurentExponents> terms;
  terms.reserve(p.size());
  for (const auto& m : p.terms()) {
    LaurentExponents e;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      bool is_t = v >= index(Var::T0) && v <= index(Var::T3);
      if (!is_t && m.exps[v] != 0)
        throw Error(ErrorCode::IntegrityError, "polynomial has non-T variables: " + p.to_string());
    }
    for (int i = 0; i < 4; ++i) e[i] = static_cast<std::int32_t>(m[t_var(i)]) - shift[i];
    terms.push_back(e);
  }
  return LaurentElement::from_terms(ring, std::move(terms));
}

std::optional<LaurentElement> laurent_divide_exact(const LaurentElement& a, const LaurentElement& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "division across rings");
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "Laurent division by zero");
  if (a.is_zero()) return a;
  ClearedLaurent ca = clear_denominators(a);
  ClearedLaurent cb = clear_denominators(b);
  // b's polynomial may still carry a monomial factor; strip it so that
  // divisibility is tested in the Laurent ring rather than the polynomial ring.
  Monomial mb = cb.polynomial.monomial_content();
  Poly2 pb = cb.polynomial.divide_by_monomial(mb);
  auto q = poly_divide_exact(ca.polynomial, pb);
  if (!q) return std::nullopt;
  // a * T^sa = q * pb = q * b * T^sb / T^mb  =>  a / b = q * T^(sb - mb - sa)
  LaurentExponents shift;
  for (int i = 0; i < 4; ++i)
    shift[i] = ca.multiplier[i] - cb.multiplier[i] + static_cast<std::int32_t>(mb[t_var(i)]);
  return from_polynomial(a.ring(), *q, shift);
}

LaurentElement laurent_gcd(const LaurentElement& a, const LaurentElement& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "gcd across rings");
  Poly2 pa = clear_denominators(a).polynomial;
  Poly2 pb = clear_denominators(b).polynomial;
  Poly2 g = poly_gcd(pa, pb);
  if (g.is_zero()) return LaurentElement::zero(a.ring());
  g = g.divide_by_monomial(g.monomial_content());
  return from_polynomial(a.ring(), g);
}

// ------------------------------------------------------------ LaurentFraction

LaurentFraction::LaurentFraction(LaurentElement num)
    : num_(std::move(num)), den_(LaurentElement::one(num_.ring())) {}

LaurentFraction::LaurentFraction(LaurentElement num, LaurentElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.ring() != den_.ring()) throw Error(ErrorCode::RingMismatch, "fraction across rings");
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Ring ring = num_.ring();
  if (num_.is_zero()) {
    den_ = LaurentElement::one(ring);
    return;
  }
  LaurentElement g = laurent_gcd(num_, den_);
  num_ = *laurent_divide_exact(num_, g);
  den_ = *laurent_divide_exact(den_, g);
  // move the monomial part of the denominator (a unit) into the numerator
  ClearedLaurent cd = clear_denominators(den_);
  Monomial m = cd.polynomial.monomial_content();
  LaurentExponents unit;
  for (int i = 0; i < 4; ++i)
    unit[i] = static_cast<std::int32_t>(m[t_var(i)]) - cd.multiplier[i];
  LaurentElement unit_elt = LaurentElement::monomial(ring, unit);
  LaurentExponents inv = unit;
  for (auto& e : inv) e = -e;
  LaurentElement unit_inv = LaurentElement::monomial(ring, inv);
  den_ = den_ * unit_inv;
  num_ = num_ * unit_inv;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
  return LaurentFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
  return LaurentFraction(num_ * o.num_, den_ * o.den_);
}

LaurentFraction LaurentFraction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return LaurentFraction(den_, num_);
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const { return *this * o.inverse(); }

LaurentFraction LaurentFraction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return LaurentFraction(num_.pow(n), den_.pow(n));
}

std::string LaurentFraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

namespace {

struct LaurentOps {
  using Value = LaurentFraction;
  Ring ring;

  Value from_int(long n) const {
    return n % 2 ? LaurentFraction(LaurentElement::one(ring)) : LaurentFraction(ring);
  }
  Value atom(std::string_view name) const {
    if (name == "P") return LaurentFraction(constant_P(ring));
    if (name == "Q") return LaurentFraction(constant_Q(ring));
    if (name == "V") return LaurentFraction(constant_V(ring));
    if (name == "L") return LaurentFraction(constant_L(ring));
    if (name.size() == 2 && name[0] == 'T' && name[1] >= '0' && name[1] <= '3')
      return LaurentFraction(LaurentElement::variable(ring, name[1] - '0'));
    throw Error(ErrorCode::ParseError, "unknown symbol '" + std::string(name) + "'");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value pow(const Value& a, long n) const { return a.pow(static_cast<int>(n)); }
};

}  // namespace

LaurentFraction parse_laurent_fraction(std::string_view text, Ring ring) {
  LaurentOps ops{ring};
  return ExpressionParser<LaurentOps>(ops, text).parse();
}

LaurentElement parse_laurent(std::string_view text, Ring ring) {
  LaurentFraction f = parse_laurent_fraction(text, ring);
  if (!f.is_laurent())
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a Laurent polynomial");
  return f.numerator();
}

std::string to_named_string(const LaurentElement& a) {
  if (a.is_zero()) return "0";
  if (a.is_one()) return "1";
  Ring ring = a.ring();
  const char* xname = ring == Ring::BN ? "L" : "V";
  LaurentElement x = ring == Ring::BN ? constant_L(ring) : constant_V(ring);
  LaurentElement p = constant_P(ring);
  auto power = [](const char* name, int e) {
    return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
  };
  constexpr int kMaxDegree = 6;
  LaurentElement pi = LaurentElement::one(ring);
  for (int i = 0; i <= kMaxDegree; ++i) {
    LaurentElement term = pi;
    for (int j = 0; i + j <= kMaxDegree; ++j) {
      if (term == a) {
        std::string out;
        if (i) out = power("P", i);
        if (j) out += (out.empty() ? "" : "*") + power(xname, j);
        return out;
      }
      term = term * x;
    }
    pi = pi * p;
  }
  return a.to_string();
}

std::string to_named_string(const LaurentFraction& a) {
  std::string n = to_named_string(a.numerator());
  if (a.is_laurent()) return n;
  std::string d = to_named_string(a.denominator());
  auto wrap = [](const std::string& s) {
    return s.find_first_of("+*-") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(d);
}

}  // namespace concordia

