#include "concordia/field2.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "concordia/error.hpp"
#include "concordia/expr.hpp"

namespace concordia {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "q1", "q2", "q3", "x", "y", "u", "T0", "T1", "T2", "T3", "U0", "U1", "U2", "U3",
};

Exponent checked_exponent(unsigned long e) {
  if (e > std::numeric_limits<Exponent>::max())
    throw Error(ErrorCode::Overflow, "exponent " + std::to_string(e) + " out of range");
  return static_cast<Exponent>(e);
}

// Sorts and cancels monomials in pairs (characteristic 2).
std::vector<Monomial> normalize(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

// Order used only for printing: graded, ties broken so that earlier
// variables come first.
bool print_before(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Var v, unsigned e) {
  Monomial m;
  m.exps[index(v)] = checked_exponent(e);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (exps[i] != 0 && other.exps[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i)
    m.exps[i] = checked_exponent(static_cast<unsigned long>(exps[i]) + other.exps[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exps[i] = static_cast<Exponent>(exps[i] - other.exps[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exps[i] = std::max(exps[i], other.exps[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exps[i] = std::min(exps[i], other.exps[i]);
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

// ------------------------------------------------------------------- Poly2

Poly2 Poly2::one() { return Poly2(std::vector<Monomial>{Monomial{}}); }

Poly2 Poly2::var(Var v, unsigned e) { return Poly2(std::vector<Monomial>{Monomial::var(v, e)}); }

Poly2 Poly2::monomial(const Monomial& m) { return Poly2(std::vector<Monomial>{m}); }

Poly2 Poly2::from_terms(std::vector<Monomial> terms) { return Poly2(normalize(std::move(terms))); }

bool Poly2::is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }

unsigned Poly2::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& m : terms_) d = std::max<unsigned>(d, m[v]);
  return d;
}

unsigned Poly2::total_degree() const {
  unsigned d = 0;
  for (const auto& m : terms_) d = std::max(d, m.degree());
  return d;
}

Monomial Poly2::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front();
  for (const auto& m : terms_) g = g.gcd(m);
  return g;
}

Poly2 Poly2::operator+(const Poly2& other) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out));
  return Poly2(std::move(out));
}

Poly2& Poly2::operator+=(const Poly2& other) { return *this = *this + other; }

Poly2 Poly2::operator*(const Poly2& other) const {
  if (is_zero() || other.is_zero()) return Poly2();
  if (other.is_monomial()) return *this * other.terms_[0];
  if (is_monomial()) return other * terms_[0];
  std::vector<Monomial> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back(a * b);
  return Poly2(normalize(std::move(prod)));
}

Poly2 Poly2::operator*(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t * m);
  // multiplication by a monomial preserves the lexicographic order
  return Poly2(std::move(out));
}

Poly2 Poly2::pow(unsigned n) const {
  Poly2 result = Poly2::one();
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) {
      // Frobenius: (sum m)^2 = sum m^2 in characteristic 2.
      std::vector<Monomial> sq;
      sq.reserve(base.terms_.size());
      for (const auto& m : base.terms_) sq.push_back(m * m);
      base = Poly2(std::move(sq));
    }
  }
  return result;
}

Poly2 Poly2::divide_by_monomial(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t)) throw Error(ErrorCode::IntegrityError, "monomial does not divide polynomial");
    out.push_back(t / m);
  }
  return Poly2(std::move(out));
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Monomial> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(), print_before);
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += " + ";
    out += sorted[i].to_string();
  }
  return out;
}

Poly2 poly_add(const Poly2& a, const Poly2& b) { return a + b; }
Poly2 poly_mul(const Poly2& a, const Poly2& b) { return a * b; }

std::optional<Poly2> poly_divide_exact(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly2();
  if (b.is_one()) return a;
  if (b.is_monomial()) {
    const Monomial& m = b.lead();
    for (const auto& t : a.terms())
      if (!m.divides(t)) return std::nullopt;
    return a.divide_by_monomial(m);
  }
  // Lexicographic division: if b | a then lead(b) | lead(r) at every step.
  std::vector<Monomial> quotient;
  Poly2 r = a;
  const Monomial& lb = b.lead();
  while (!r.is_zero()) {
    const Monomial& lr = r.lead();
    if (!lb.divides(lr)) return std::nullopt;
    Monomial t = lr / lb;
    quotient.push_back(t);
    r += b * t;
  }
  return Poly2::from_terms(std::move(quotient));
}

// --------------------------------------------------------------------- gcd

namespace {

// Coefficient of v^d, with v removed.
Poly2 coeff(const Poly2& p, Var v, unsigned d) {
  std::vector<Monomial> out;
  for (const auto& m : p.terms()) {
    if (m[v] != d) continue;
    Monomial t = m;
    t.exps[index(v)] = 0;
    out.push_back(t);
  }
  return Poly2::from_terms(std::move(out));
}

Poly2 leading_coeff(const Poly2& p, Var v) { return coeff(p, v, p.degree_in(v)); }

Poly2 exact(const Poly2& a, const Poly2& b) {
  auto q = poly_divide_exact(a, b);
  if (!q) throw Error(ErrorCode::IntegrityError, "expected exact division");
  return *q;
}

Poly2 content_in(const Poly2& p, Var v) {
  unsigned d = p.degree_in(v);
  Poly2 g;
  for (unsigned k = 0; k <= d; ++k) {
    Poly2 c = coeff(p, v, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to v (up to a power of lc(b)).
Poly2 pseudo_remainder(const Poly2& a, const Poly2& b, Var v) {
  unsigned db = b.degree_in(v);
  Poly2 lcb = leading_coeff(b, v);
  Poly2 r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(v);
    if (dr < db) break;
    Poly2 lcr = leading_coeff(r, v);
    r = lcb * r + (lcr * b) * Monomial::var(v, dr - db);
  }
  return r;
}

Poly2 primitive_part(const Poly2& p, Var v) {
  if (!p.contains(v)) return Poly2::one();
  return exact(p, content_in(p, v));
}

// Arithmetic in GF(2^16) = F2[t]/(t^16 + t^12 + t^3 + t + 1), used only to
// bound gcd degrees by evaluating all but one variable at random points.
using G16 = std::uint16_t;

G16 g16_mul(G16 a, G16 b) {
  std::uint32_t p = 0;
  for (int i = 0; i < 16; ++i)
    if ((b >> i) & 1u) p ^= static_cast<std::uint32_t>(a) << i;
  for (int i = 31; i >= 16; --i)
    if ((p >> i) & 1u) p ^= 0x1100Bu << (i - 16);
  return static_cast<G16>(p);
}

G16 g16_pow(G16 a, unsigned n) {
  G16 r = 1;
  while (n) {
    if (n & 1u) r = g16_mul(r, a);
    a = g16_mul(a, a);
    n >>= 1u;
  }
  return r;
}

G16 g16_inv(G16 a) { return g16_pow(a, 65534); }

using DenseG16 = std::vector<G16>;  // coefficient of v^k at index k

void trim(DenseG16& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DenseG16 image(const Poly2& p, Var v, const std::array<G16, kNumVars>& pt) {
  DenseG16 out(p.degree_in(v) + 1, 0);
  for (const auto& m : p.terms()) {
    G16 c = 1;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (i != index(v) && m.exps[i]) c = g16_mul(c, g16_pow(pt[i], m.exps[i]));
    out[m[v]] ^= c;
  }
  trim(out);
  return out;
}

std::size_t dense_gcd_degree(DenseG16 a, DenseG16 b) {
  while (!b.empty()) {
    G16 inv = g16_inv(b.back());
    while (a.size() >= b.size()) {
      G16 f = g16_mul(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= g16_mul(f, b[i]);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on deg_v gcd(a, b).  Deterministic: the evaluation points come
// from a fixed generator, and a point is only used when neither leading
// coefficient in v vanishes there.
unsigned gcd_degree_bound(const Poly2& a, const Poly2& b, Var v) {
  unsigned da = a.degree_in(v), db = b.degree_in(v);
  unsigned bound = std::min(da, db);
  if (bound == 0) return 0;
  std::uint64_t state = 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(index(v)) << 32);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::array<G16, kNumVars> pt{};
    for (auto& c : pt) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      c = static_cast<G16>(state >> 40);
    }
    DenseG16 ia = image(a, v, pt), ib = image(b, v, pt);
    if (ia.size() != da + 1 || ib.size() != db + 1) continue;
    bound = std::min<unsigned>(bound, static_cast<unsigned>(dense_gcd_degree(ia, ib)));
    if (bound == 0) break;
  }
  return bound;
}

Poly2 gcd_core(const Poly2& a, const Poly2& b) {
  if (a == b) return a;
  if (a.is_one() || b.is_one()) return Poly2::one();
  if (a.size() <= b.size()) {
    if (poly_divide_exact(b, a)) return a;
  } else if (poly_divide_exact(a, b)) {
    return b;
  }
  // Variables in which the gcd has degree 0 are removed by taking contents;
  // the PRS then runs in the remaining variable of smallest degree.
  std::optional<Var> main;
  unsigned best = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var w = static_cast<Var>(i);
    if (!a.contains(w) && !b.contains(w)) continue;
    if (!a.contains(w)) return poly_gcd(a, content_in(b, w));
    if (!b.contains(w)) return poly_gcd(content_in(a, w), b);
    if (gcd_degree_bound(a, b, w) == 0) return poly_gcd(content_in(a, w), content_in(b, w));
    unsigned d = std::max(a.degree_in(w), b.degree_in(w));
    if (!main || d < best) {
      main = w;
      best = d;
    }
  }
  if (!main) return Poly2::one();
  Var v = *main;

  Poly2 ca = content_in(a, v);
  Poly2 cb = content_in(b, v);
  Poly2 c = poly_gcd(ca, cb);
  Poly2 pa = exact(a, ca);
  Poly2 pb = exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly2 r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? Poly2() : primitive_part(r, v);
  }
  return c * primitive_part(pa, v);
}

}  // namespace

Poly2 poly_gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial m = ma.gcd(mb);
  Poly2 ra = a.divide_by_monomial(ma);
  Poly2 rb = b.divide_by_monomial(mb);
  return gcd_core(ra, rb) * m;
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly2 num) : num_(std::move(num)), den_(Poly2::one()) {}

RationalFunction::RationalFunction(Poly2 num, Poly2 den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = Poly2::one();
    return;
  }
  Poly2 g = poly_gcd(num, den);
  if (g.is_one()) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = exact(num, g);
    den_ = exact(den, g);
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  if (den_.is_one()) return RationalFunction(num_ * o.den_ + o.num_, o.den_, Reduced{});
  if (o.den_.is_one()) return RationalFunction(num_ + o.num_ * den_, den_, Reduced{});
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g))
  Poly2 g = poly_gcd(den_, o.den_);
  Poly2 bg = exact(den_, g);
  Poly2 dg = exact(o.den_, g);
  Poly2 num = num_ * dg + o.num_ * bg;
  if (num.is_zero()) return RationalFunction();
  if (g.is_one()) return RationalFunction(std::move(num), den_ * dg, Reduced{});
  // only factors of g can be shared with the new numerator
  Poly2 h = poly_gcd(num, g);
  return RationalFunction(exact(num, h), exact(g, h) * bg * dg, Reduced{});
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  Poly2 g1 = poly_gcd(num_, o.den_);
  Poly2 g2 = poly_gcd(o.num_, den_);
  Poly2 n = exact(num_, g1) * exact(o.num_, g2);
  Poly2 d = exact(den_, g2) * exact(o.den_, g1);
  return RationalFunction(std::move(n), std::move(d), Reduced{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RationalFunction(den_, num_, Reduced{});
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)),
                          Reduced{});
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || !den_.is_monomial() || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
RationalFunction rf_inv(const RationalFunction& a) { return a.inverse(); }

namespace {

struct RationalOps {
  using Value = RationalFunction;
  Value from_int(long n) const { return n % 2 ? RationalFunction::one() : RationalFunction(); }
  Value atom(std::string_view name) const {
    auto v = var_from_name(name);
    if (!v) throw Error(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
    return RationalFunction::var(*v);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value pow(const Value& a, long n) const { return a.pow(static_cast<int>(n)); }
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) {
  RationalOps ops;
  return ExpressionParser<RationalOps>(ops, text).parse();
}

}  // namespace concordia
