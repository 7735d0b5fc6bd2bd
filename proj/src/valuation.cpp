#include "concordia/valuation.hpp"

#include <cctype>

#include "concordia/error.hpp"

namespace concordia {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_ = Backend(mp::cpp_int(num), mp::cpp_int(den));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto integer = [&](std::string_view s) {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    return mp::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Backend(integer(text)));
  mp::cpp_int den = integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rational(Backend(integer(text.substr(0, slash)), den));
}

bool Rational::is_integer() const { return mp::denominator(v_) == 1; }

namespace {
long long to_ll(const mp::cpp_int& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw Error(ErrorCode::Overflow, "rational component exceeds 64 bits");
  return static_cast<long long>(n);
}
}  // namespace

long long Rational::num() const { return to_ll(mp::numerator(v_)); }
long long Rational::den() const { return to_ll(mp::denominator(v_)); }

long long Rational::floor() const {
  mp::cpp_int n = mp::numerator(v_), d = mp::denominator(v_);
  mp::cpp_int q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return to_ll(q);
}

long long Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  return Rational(Backend(v_ / o.v_));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  if (v_ < o.v_) return std::strong_ordering::less;
  if (v_ > o.v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  std::string n = mp::numerator(v_).str();
  if (is_integer()) return n;
  return n + "/" + mp::denominator(v_).str();
}

// ------------------------------------------------------------------- Value

void Value::check_kind(const Value& o) const {
  if (kind_ != o.kind_)
    throw Error(ErrorCode::ValueGroupMismatch, "cannot combine values " + to_string() + " and " + o.to_string());
}

Value Value::operator+(const Value& o) const {
  check_kind(o);
  return Value(kind_, a_ + o.a_, b_ + o.b_);
}

Value Value::operator-(const Value& o) const {
  check_kind(o);
  return Value(kind_, a_ - o.a_, b_ - o.b_);
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  check_kind(o);
  if (auto c = a_ <=> o.a_; c != 0) return c;
  return b_ <=> o.b_;
}

std::string Value::to_string() const {
  if (kind_ == ValueKind::Scalar) return a_.to_string();
  return "(" + a_.to_string() + ", " + b_.to_string() + ")";
}

// ---------------------------------------------------------- MonomialWeight

MonomialWeight::MonomialWeight(ValueKind kind) : kind_(kind) { w_.fill(Value::zero(kind)); }

MonomialWeight::MonomialWeight(ValueKind kind, std::initializer_list<std::pair<Var, Value>> weights)
    : MonomialWeight(kind) {
  for (const auto& [v, w] : weights) set(v, w);
}

void MonomialWeight::set(Var v, const Value& w) {
  if (v != Var::x && v != Var::y && v != Var::u)
    throw Error(ErrorCode::ParseError, "only x, y, u carry weights (got " + std::string(var_name(v)) + ")");
  if (w.kind() != kind_)
    throw Error(ErrorCode::ValueGroupMismatch, "weight kind differs from the valuation's value group");
  if (!w.is_positive())
    throw Error(ErrorCode::ParseError, "weight of " + std::string(var_name(v)) + " must be positive");
  w_[index(v)] = w;
}

Value MonomialWeight::weight(const Monomial& m) const {
  Value total = Value::zero(kind_);
  for (Var v : {Var::x, Var::y, Var::u})
    if (m[v] != 0) total = total + w_[index(v)] * m[v];
  return total;
}

std::string MonomialWeight::to_string() const {
  std::string out;
  for (Var v : {Var::x, Var::y, Var::u}) {
    if (w_[index(v)].is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += "ord(" + std::string(var_name(v)) + ") = " + w_[index(v)].to_string();
  }
  return out.empty() ? "trivial" : out;
}

Value ord_poly(const Poly2& p, const MonomialWeight& w) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "ord of the zero polynomial");
  Value best = w.weight(p.terms()[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    Value v = w.weight(p.terms()[i]);
    if (v < best) best = v;
  }
  return best;
}

Value ord_rf(const RationalFunction& f, const MonomialWeight& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroElement, "ord of zero");
  return ord_poly(f.numerator(), w) - ord_poly(f.denominator(), w);
}

Poly2 leading_form(const Poly2& p, const MonomialWeight& w) {
  Value m = ord_poly(p, w);
  std::vector<Monomial> terms;
  for (const auto& t : p.terms())
    if (w.weight(t) == m) terms.push_back(t);
  return Poly2::from_terms(std::move(terms));
}

}  // namespace concordia
