#include "concordia/ideals.hpp"

#include <cctype>
#include <mutex>

#include "concordia/error.hpp"

namespace concordia {

struct FractionalIdeal::Cache {
  std::once_flag once;
  std::optional<LaurentElement> common_denominator;
  GroebnerBasis basis;
};

namespace {

LaurentElement laurent_lcm(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement g = laurent_gcd(a, b);
  return *laurent_divide_exact(a * b, g);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

FractionalIdeal::FractionalIdeal(Ring ring, std::vector<LaurentFraction> gens, std::vector<std::string> labels)
    : ring_(ring), cache_(std::make_shared<Cache>()) {
  if (!labels.empty() && labels.size() != gens.size())
    throw Error(ErrorCode::IntegrityError, "ideal labels do not match generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].ring() != ring) throw Error(ErrorCode::RingMismatch, "ideal generator in the wrong ring");
    if (gens[i].is_zero()) continue;
    gens_.push_back(gens[i]);
    labels_.push_back(labels.empty() ? gens[i].to_string() : labels[i]);
  }
  if (gens_.empty()) throw Error(ErrorCode::ZeroElement, "a fractional ideal needs a nonzero generator");
}

FractionalIdeal FractionalIdeal::parse(std::string_view list, Ring ring) {
  std::vector<LaurentFraction> gens;
  std::vector<std::string> labels;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i < list.size()) {
      char c = list[i];
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      if (c != ',' || depth != 0) continue;
    }
    std::string part = trim(list.substr(start, i - start));
    if (part.empty()) throw Error(ErrorCode::ParseError, "empty generator in '" + std::string(list) + "'");
    gens.push_back(parse_laurent_fraction(part, ring));
    labels.push_back(part);
    start = i + 1;
  }
  return FractionalIdeal(ring, std::move(gens), std::move(labels));
}

FractionalIdeal FractionalIdeal::unit(Ring ring) {
  return FractionalIdeal(ring, {LaurentFraction(LaurentElement::one(ring))}, {"1"});
}

const FractionalIdeal::Cache& FractionalIdeal::cache() const {
  std::call_once(cache_->once, [this] {
    LaurentElement b = LaurentElement::one(ring_);
    for (const auto& g : gens_) b = laurent_lcm(b, g.denominator());
    std::vector<Poly2> polys;
    Monomial used;
    for (const auto& g : gens_) {
      LaurentElement h = g.numerator() * *laurent_divide_exact(b, g.denominator());
      Poly2 p = clear_denominators(h).polynomial;
      for (int i = 0; i < 4; ++i) {
        Var t = static_cast<Var>(index(Var::T0) + i);
        if (p.contains(t)) used.exps[index(t)] = 1;
      }
      polys.push_back(std::move(p));
    }
    for (int i = 0; i < 4; ++i) {
      Var t = static_cast<Var>(index(Var::T0) + i);
      Var u = static_cast<Var>(index(Var::U0) + i);
      if (used[t]) polys.push_back(Poly2::monomial(Monomial::var(t) * Monomial::var(u)) + Poly2::one());
    }
    cache_->basis = GroebnerBasis::compute(polys);
    cache_->common_denominator = b;
  });
  return *cache_;
}

const GroebnerBasis& FractionalIdeal::groebner() const { return cache().basis; }

bool FractionalIdeal::contains(const LaurentFraction& f) const {
  if (f.ring() != ring_) throw Error(ErrorCode::RingMismatch, "membership test across rings");
  if (f.is_zero()) return true;
  const Cache& c = cache();
  auto q = laurent_divide_exact(f.numerator() * *c.common_denominator, f.denominator());
  if (!q) return false;
  return c.basis.contains(clear_denominators(*q).polynomial);
}

bool FractionalIdeal::contains(const FractionalIdeal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::string FractionalIdeal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ", ";
    out += labels_[i];
  }
  return out + ">";
}

bool membership(const LaurentFraction& f, const FractionalIdeal& ideal) { return ideal.contains(f); }

FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "ideal product across rings");
  auto wrap = [](const std::string& s) {
    for (char c : s)
      if (c == '+' || c == '/') return "(" + s + ")";
    return s;
  };
  std::vector<LaurentFraction> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    for (std::size_t j = 0; j < b.generators().size(); ++j) {
      gens.push_back(a.generators()[i] * b.generators()[j]);
      const std::string& la = a.labels()[i];
      const std::string& lb = b.labels()[j];
      labels.push_back(la == "1" ? lb : lb == "1" ? la : wrap(la) + "*" + wrap(lb));
    }
  return FractionalIdeal(a.ring(), std::move(gens), std::move(labels));
}

FractionalIdeal ideal_power(const FractionalIdeal& a, int n) {
  if (n < 0) throw Error(ErrorCode::UnsupportedPresentation, "negative ideal power");
  FractionalIdeal out = FractionalIdeal::unit(a.ring());
  for (int i = 0; i < n; ++i) out = ideal_product(out, a);
  return out;
}

FractionalIdeal module_quotient_rank1(const std::vector<std::vector<LaurentElement>>& relations) {
  if (relations.size() != 1)
    throw Error(ErrorCode::UnsupportedPresentation,
                "expected exactly one relation, got " + std::to_string(relations.size()));
  const auto& row = relations[0];
  if (row.size() != 2)
    throw Error(ErrorCode::UnsupportedPresentation,
                "only relations on two generators are supported (got " + std::to_string(row.size()) + ")");
  if (row[0].is_zero() && row[1].is_zero())
    throw Error(ErrorCode::UnsupportedPresentation, "zero relation gives a rank-2 module");
  LaurentElement g = laurent_gcd(row[0], row[1]);
  LaurentElement a1 = *laurent_divide_exact(row[0], g);
  LaurentElement a2 = *laurent_divide_exact(row[1], g);
  Ring ring = a1.ring();
  return FractionalIdeal(ring, {LaurentFraction(a2), LaurentFraction(a1)});
}

std::vector<std::pair<int, int>> g_region(const FractionalIdeal& ideal, int gmax, int dmax) {
  if (gmax < 0 || dmax < 0) throw Error(ErrorCode::ParseError, "box bounds must be non-negative");
  Ring ring = ideal.ring();
  LaurentElement p = constant_P(ring), v = ring == Ring::BN ? constant_L(ring) : constant_V(ring);
  std::vector<std::pair<int, int>> out;
  LaurentElement pg = LaurentElement::one(ring);
  for (int g = 0; g <= gmax; ++g) {
    LaurentElement x = pg;
    for (int d = 0; d <= dmax; ++d) {
      if (ideal.contains(LaurentFraction(x))) out.emplace_back(g, d);
      x = x * v;
    }
    pg = pg * p;
  }
  return out;
}

std::string ae_rewrite(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string_view tok = text.substr(i, j - i);
      out += tok == "u" ? "L" : tok == "w" ? "P" : std::string(tok);
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

// ---------------------------------------------------------- ValuationIdeal

ValuationIdeal::ValuationIdeal(std::vector<RationalFunction> gens, MonomialWeight weight) : weight_(std::move(weight)) {
  bool found = false;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Value o = ord_rf(g, weight_);
    if (!found || o < ord_) {
      gen_ = g;
      ord_ = o;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::ZeroElement, "a fractional ideal needs a nonzero generator");
}

ValuationIdeal ValuationIdeal::over(const BaseChange& sigma, std::vector<RationalFunction> gens) {
  if (sigma.degenerate())
    throw Error(ErrorCode::DegenerateBaseChange, "ideal ords are undefined for degenerate base change " + sigma.name());
  return ValuationIdeal(std::move(gens), sigma.weight());
}

std::string ValuationIdeal::to_string() const { return "<" + gen_.to_string() + ">"; }

Value ideal_ord(const ValuationIdeal& i) { return i.ord(); }

ValuationIdeal ideal_product(const ValuationIdeal& a, const ValuationIdeal& b) {
  if (a.weight().kind() != b.weight().kind())
    throw Error(ErrorCode::ValueGroupMismatch, "ideal product across value groups");
  return ValuationIdeal({a.generator() * b.generator()}, a.weight());
}

ValuationIdeal ideal_quotient(const HomologySummary& h, const BaseChange& sigma) {
  if (!h.cycle_coefficient) throw Error(ErrorCode::IntegrityError, "homology summary carries no cycle data");
  return ValuationIdeal::over(sigma, {h.cycle_coefficient->inverse()});
}

}  // namespace concordia
