#include "concordia/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "concordia/error.hpp"

namespace concordia {

KnotModel::KnotModel(std::string name_, ChainComplex complex_, DistinguishedCycle cycle_,
                     std::optional<int> signature_, std::vector<std::string> expected)
    : name(std::move(name_)),
      complex(std::move(complex_)),
      cycle(std::move(cycle_)),
      signature(signature_),
      expected_ideal(std::move(expected)) {
  complex.check_cycle(cycle);
}

Rational adjusted_genus(int chi, int c_plus, int c_minus) {
  return Rational(static_cast<long long>(-chi) + c_plus - c_minus, 2);
}

long long eta(const Rational& g_a, int delta, int nu) {
  Rational v = g_a + Rational(delta, 2) - Rational(nu, 4);
  if (!v.is_integer())
    throw Error(ErrorCode::NonIntegral, "eta = " + v.to_string() + " is not an integer; the input data is inconsistent");
  return v.num();
}

namespace {

RationalFunction rf_pow(const RationalFunction& f, int n) {
  RationalFunction out = RationalFunction::one();
  for (int i = 0; i < n; ++i) out = out * f;
  return out;
}

LaurentElement multiplier(const KnotModel& k) {
  Ring ring = k.ring();
  LaurentElement x = ring == Ring::BN ? constant_L(ring) : constant_V(ring);
  return constant_P(ring).pow(k.cycle.genus) * x.pow(k.cycle.dplus);
}

// Nonzero columns (as vectors) of m.
std::vector<std::vector<LaurentElement>> nonzero_columns(const LaurentMatrix& m) {
  std::vector<std::vector<LaurentElement>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<LaurentElement> col;
    bool nz = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      col.push_back(m(i, j));
      nz = nz || !m(i, j).is_zero();
    }
    if (nz) out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

ValuationIdeal znat(const KnotModel& k, const BaseChange& sigma) {
  if (!sigma.reduced_valid())
    throw Error(ErrorCode::NotReducedValid, "base change " + sigma.name() + " does not satisfy sigma(T0) = sigma(T1)");
  sigma.pi_lambda();  // DegenerateBaseChange
  HomologySummary h = homology_over_valuation(k.complex, sigma, &k.cycle);
  RationalFunction m = rf_pow(sigma.sigma_P(), k.cycle.genus) * rf_pow(sigma.sigma_V(), k.cycle.dplus);
  const RationalFunction& c = *h.cycle_coefficient;
  RationalFunction gen = k.cycle.direction == Direction::UnknotToK ? m * c.inverse() : c * m.inverse();
  return ValuationIdeal::over(sigma, {gen});
}

FractionalIdeal znat_ring(const KnotModel& k) {
  const ChainComplex& c = k.complex;
  const DistinguishedCycle& cyc = k.cycle;
  Ring ring = c.ring();
  int deg = cyc.degree;
  LaurentFraction m(multiplier(k));
  std::vector<LaurentFraction> image;

  if (cyc.direction == Direction::UnknotToK && !c.differential(deg + 1).is_zero_matrix()) {
    // cycles = kernel of a single nonzero row on S^2, no boundaries
    auto rows = nonzero_columns(c.differential(deg + 1).transpose());
    if (c.rank(deg) != 2 || rows.size() != 1 || !nonzero_columns(c.differential(deg)).empty())
      throw Error(ErrorCode::UnsupportedPresentation,
                  "ring-level ideal needs the cycles in the cycle degree to be free of rank one");
    LaurentElement g = laurent_gcd(rows[0][0], rows[0][1]);
    LaurentElement w0 = *laurent_divide_exact(rows[0][1], g), w1 = *laurent_divide_exact(rows[0][0], g);
    // iota = coeff * (w0, w1)
    LaurentFraction coeff = w0.is_zero() ? LaurentFraction(cyc.vector[1]) / LaurentFraction(w1)
                                         : LaurentFraction(cyc.vector[0]) / LaurentFraction(w0);
    if (coeff.is_zero()) throw Error(ErrorCode::CycleInTorsion, "the distinguished cycle is zero");
    image.push_back(m / coeff);
  } else if (cyc.direction == Direction::UnknotToK) {
    auto rel = nonzero_columns(c.differential(deg));
    LaurentFraction phi_iota(ring);
    std::vector<LaurentFraction> j;
    if (c.rank(deg) == 1 && rel.empty()) {
      phi_iota = LaurentFraction(cyc.vector[0]);
      j = {LaurentFraction(LaurentElement::one(ring))};
    } else if (c.rank(deg) == 2 && rel.size() == 1) {
      LaurentElement g = laurent_gcd(rel[0][0], rel[0][1]);
      LaurentElement a1 = *laurent_divide_exact(rel[0][0], g), a2 = *laurent_divide_exact(rel[0][1], g);
      // e1 -> a2, e2 -> a1
      phi_iota = LaurentFraction(cyc.vector[0] * a2 + cyc.vector[1] * a1);
      j = module_quotient_rank1({rel[0]}).generators();
    } else if (c.rank(deg) == 1) {
      throw Error(ErrorCode::CycleInTorsion, "homology in the cycle degree is torsion");
    } else {
      throw Error(ErrorCode::UnsupportedPresentation,
                  "ring-level ideal is only computed for free rank one or S^2 modulo one relation");
    }
    if (phi_iota.is_zero()) throw Error(ErrorCode::CycleInTorsion, "the distinguished cycle is zero in homology");
    for (const auto& g : j) image.push_back(g * m / phi_iota);
  } else {
    LaurentMatrix dout = c.differential(deg + 1);
    auto rows = nonzero_columns(dout.transpose());
    std::vector<LaurentFraction> values;
    if (rows.empty()) {
      for (const auto& v : cyc.vector) values.emplace_back(v);
    } else if (c.rank(deg) == 2 && rows.size() == 1) {
      LaurentElement g = laurent_gcd(rows[0][0], rows[0][1]);
      LaurentElement b1 = *laurent_divide_exact(rows[0][0], g), b2 = *laurent_divide_exact(rows[0][1], g);
      values.emplace_back(cyc.vector[0] * b2 + cyc.vector[1] * b1);
    } else if (c.rank(deg) == 1) {
      throw Error(ErrorCode::CycleInTorsion, "no cycles in the covector degree");
    } else {
      throw Error(ErrorCode::UnsupportedPresentation,
                  "ring-level ideal is only computed when the cycles form a free module of rank one");
    }
    for (const auto& v : values)
      if (!v.is_zero()) image.push_back(v / m);
    if (image.empty()) throw Error(ErrorCode::CycleInTorsion, "the covector vanishes on all cycles");
  }
  std::vector<std::string> labels;
  for (const auto& g : image) labels.push_back(to_named_string(g));
  return FractionalIdeal(ring, std::move(image), std::move(labels));
}

Value f_sigma(const KnotModel& k, const BaseChange& sigma) { return ideal_ord(znat(k, sigma)); }

Rational f_r(const KnotModel& k, const Rational& r) { return f_sigma(k, builtin("B", r)).first(); }

Rational f_plus(const KnotModel& k) {
  Value v = f_sigma(k, builtin("C"));
  if (!v.first().is_zero())
    throw Error(ErrorCode::IntegrityError,
                "first coordinate of f_plus is " + v.first().to_string() + ", but it vanishes for knots");
  return v.second();
}

// ------------------------------------------------------------------ profile

std::vector<Rational> parse_samples(const std::string& text) {
  std::vector<Rational> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    Rational step = Rational::parse(text.substr(0, dots));
    Rational last = Rational::parse(text.substr(dots + 2));
    if (step <= Rational(0)) throw Error(ErrorCode::ParseError, "sample step must be positive");
    for (Rational r = step; r <= last; r += step) out.push_back(r);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no samples in '" + text + "'");
  return out;
}

namespace {

struct Line {
  Rational intercept, slope;
  Rational at(const Rational& r) const { return intercept + slope * r; }
};

Line through(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
  Rational slope = (b.second - a.second) / (b.first - a.first);
  return {a.second - slope * a.first, slope};
}

bool on(const Line& l, const std::pair<Rational, Rational>& p) { return l.at(p.first) == p.second; }

std::vector<Rational> evaluate_parallel(const KnotModel& k, const std::vector<Rational>& rs) {
  std::vector<std::optional<Rational>> out(rs.size());
  std::vector<std::exception_ptr> errors(rs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(rs.size())));
  auto work = [&] {
    for (std::size_t i = next++; i < rs.size(); i = next++) {
      try {
        out[i] = f_r(k, rs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Rational> values;
  for (auto& v : out) values.push_back(*v);
  return values;
}

std::size_t max_u_degree(const Poly2& p) {
  std::size_t d = 0;
  for (const auto& m : p.terms()) d = std::max<std::size_t>(d, m[Var::u]);
  return d;
}

Rational slope_bound_for(const KnotModel& k) {
  BaseChange b = builtin("B", Rational(1));
  std::size_t d = std::max(max_u_degree(b.sigma_V().numerator()), max_u_degree(b.sigma_V().denominator()));
  auto visit = [&](const LaurentElement& e) {
    RationalFunction f = b.apply(e);
    d = std::max({d, max_u_degree(f.numerator()), max_u_degree(f.denominator())});
  };
  for (const auto& m : k.complex.diffs())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) visit(m(i, j));
  for (const auto& e : k.cycle.vector) visit(e);
  return Rational(4 * static_cast<long long>(d));
}

class ProfileBuilder {
 public:
  ProfileBuilder(const KnotModel& k, int depth) : k_(k), depth_(depth) {}

  Profile run(std::vector<Rational> samples) {
    std::sort(samples.begin(), samples.end());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (samples[i] <= Rational(0) || samples[i] > Rational(1))
        throw Error(ErrorCode::MissingParameter, "profile samples must lie in (0,1], got " + samples[i].to_string());
      if (i && samples[i] == samples[i - 1])
        throw Error(ErrorCode::ParseError, "duplicate profile sample " + samples[i].to_string());
    }
    std::vector<Rational> values = evaluate_parallel(k_, samples);
    for (std::size_t i = 0; i < samples.size(); ++i) points_.emplace_back(samples[i], values[i]);
    for (const auto& p : points_) known_[p.first] = p.second;

    Profile out;
    std::vector<ProfileSegment> segs = greedy_runs();
    for (std::size_t s = 0; s < segs.size(); ++s) {
      if (s == 0) {
        out.segments.push_back(segs[s]);
        continue;
      }
      ProfileSegment& a = out.segments.back();
      ProfileSegment b = segs[s];
      if (a.to < b.from) resolve(a, b, out.unresolved);
      out.segments.push_back(b);
    }
    out.slope_bound = slope_bound_for(k_);
    for (const auto& s : out.segments) {
      Rational abs = s.slope < Rational(0) ? -s.slope : s.slope;
      if (abs > out.slope_bound) out.slopes_within_bound = false;
    }
    for (const auto& [r, f] : known_) out.samples.emplace_back(r, f);
    return out;
  }

 private:
  Rational eval(const Rational& r) {
    auto it = known_.find(r);
    if (it != known_.end()) return it->second;
    Rational v = f_r(k_, r);
    known_[r] = v;
    return v;
  }

  std::vector<ProfileSegment> greedy_runs() const {
    std::vector<ProfileSegment> out;
    const auto& p = points_;
    std::size_t n = p.size(), i = 0;
    while (i < n) {
      if (i + 1 == n) {
        out.push_back({p[i].first, p[i].first, p[i].second, Rational(0), 1});
        break;
      }
      Line l = through(p[i], p[i + 1]);
      std::size_t j = i + 1;
      while (j + 1 < n && on(l, p[j + 1])) ++j;
      out.push_back({p[i].first, p[j].first, l.intercept, l.slope, j - i + 1});
      if (j + 1 == n) break;
      // the last point may start the next run if it is collinear with the next two
      bool shared = j + 2 < n && on(through(p[j + 1], p[j + 2]), p[j]);
      i = shared ? j : j + 1;
    }
    return out;
  }

  // Fills the gap between a.to and b.from: certifies the intersection of the
  // two lines or bisects, up to depth_ extra evaluations.
  void resolve(ProfileSegment& a, ProfileSegment& b, std::vector<std::pair<Rational, Rational>>& unresolved) {
    Line la{a.intercept, a.slope};
    for (int step = 0; step <= depth_; ++step) {
      Line lb{b.intercept, b.slope};
      bool b_has_line = b.support >= 2;
      if (b_has_line && la.slope != lb.slope) {
        Rational x = (lb.intercept - la.intercept) / (la.slope - lb.slope);
        if (a.to < x && x < b.from && step < depth_) {
          Rational fx = eval(x);
          if (fx == la.at(x)) {
            a.to = x;
            b.from = x;
            ++a.support;
            ++b.support;
            return;
          }
        }
      }
      if (step == depth_) break;
      Rational mid = (a.to + b.from) * Rational(1, 2);
      Rational fm = eval(mid);
      if (fm == la.at(mid)) {
        a.to = mid;
        ++a.support;
      } else if (b_has_line && fm == lb.at(mid)) {
        b.from = mid;
        ++b.support;
      } else if (!b_has_line) {
        Line l = through({mid, fm}, {b.from, known_.at(b.from)});
        b.intercept = l.intercept;
        b.slope = l.slope;
        b.from = mid;
        b.support = 2;
      } else {
        break;
      }
    }
    unresolved.emplace_back(a.to, b.from);
  }

  const KnotModel& k_;
  int depth_;
  std::vector<std::pair<Rational, Rational>> points_;
  std::map<Rational, Rational> known_;
};

}  // namespace

Profile f_profile(const KnotModel& k, std::vector<Rational> samples, int depth) {
  if (samples.empty()) throw Error(ErrorCode::ParseError, "profile needs at least one sample");
  if (depth < 0) throw Error(ErrorCode::ParseError, "refinement depth must be non-negative");
  return ProfileBuilder(k, depth).run(std::move(samples));
}

// ------------------------------------------------------------------ bounds

namespace {

// a/b in Q, or the least n >= 0 with n*b >= a in Q x Q.
Rational ratio_bound(const Value& a, const Value& b) {
  if (a.kind() == ValueKind::Scalar) return a.first() / b.first();
  if (a <= Value::zero(a.kind())) return Rational(0);
  if (b.first().is_zero()) {
    if (a.first() > Rational(0))
      throw Error(ErrorCode::IntegrityError, "no multiple of " + b.to_string() + " reaches " + a.to_string());
    return Rational((a.second() / b.second()).ceil());
  }
  long long n = std::max(0LL, (a.first() / b.first()).ceil());
  if (b * n < a) ++n;
  return Rational(n);
}

std::string ratio_text(const Rational& v) {
  std::string s = v.to_string();
  if (v < Rational(0))
    s += " (vacuous)";
  else if (!v.is_integer())
    s += " (integer bound " + std::to_string(v.ceil()) + ")";
  return s;
}

}  // namespace

UnknottingBound unknotting_bound(const KnotModel& k, const BaseChange& sigma, int max_power) {
  auto [pi, lambda] = sigma.pi_lambda();
  HomologySummary h = homology_over_valuation(k.complex, sigma);
  Value tau = Value::zero(lambda.kind());
  for (const auto& d : h.degrees)
    for (const auto& t : d.torsion) tau = std::max(tau, t);
  UnknottingBound out{tau, lambda, ratio_bound(tau, lambda), {}};

  const ChainComplex& c = k.complex;
  Ring ring = c.ring();
  std::vector<FractionalIdeal> torsion_ideals;
  for (int d = c.lo(); d <= c.hi(); ++d) {
    if (c.rank(d) != 1 || !c.differential(d + 1).is_zero_matrix()) continue;
    auto cols = nonzero_columns(c.differential(d));
    if (cols.empty()) continue;
    std::vector<LaurentFraction> gens;
    for (const auto& col : cols) gens.emplace_back(col[0]);
    torsion_ideals.emplace_back(ring, gens);
  }
  if (torsion_ideals.empty()) return out;
  LaurentElement x = ring == Ring::BN ? constant_L(ring) : constant_V(ring);
  FractionalIdeal base(ring, {LaurentFraction(constant_P(ring)), LaurentFraction(x)});
  for (int n = 1; n <= max_power; ++n) {
    FractionalIdeal power = ideal_power(base, n);
    bool all = std::all_of(torsion_ideals.begin(), torsion_ideals.end(),
                           [&](const FractionalIdeal& t) { return t.contains(power); });
    out.annihilation.emplace_back(n, all);
    if (all) break;
  }
  return out;
}

std::vector<BoundRow> bounds(const KnotModel& k, const BaseChange& sigma) {
  std::vector<BoundRow> rows;
  auto guarded = [&rows](const std::string& name, const auto& fn) {
    try {
      rows.push_back({name, fn(), ""});
    } catch (const Error& e) {
      rows.push_back({name, "", std::string(e.name())});
    }
  };
  std::optional<Value> f;
  std::optional<std::pair<Value, Value>> pl;
  try {
    pl = sigma.pi_lambda();
    f = f_sigma(k, sigma);
  } catch (const Error& e) {
    for (const char* n : {"slice genus", "genus and double points", "eta", "first Betti number"})
      rows.push_back({n, "", std::string(e.name())});
  }
  if (f) {
    const Value& pi = pl->first;
    const Value& lambda = pl->second;
    guarded("slice genus", [&] { return "slice genus >= " + ratio_text(ratio_bound(*f, pi)); });
    guarded("genus and double points", [&] {
      return "g*" + pi.to_string() + " + d*" + lambda.to_string() + " >= " + f->to_string();
    });
    guarded("eta", [&]() -> std::string {
      if (!sigma.nonorientable_valid())
        throw Error(ErrorCode::NotNonorientableValid, "eta bound needs sigma(T0) = 1");
      return "eta(S) >= " + ratio_text(ratio_bound(*f, pi));
    });
    guarded("first Betti number", [&]() -> std::string {
      if (!sigma.nonorientable_valid())
        throw Error(ErrorCode::NotNonorientableValid, "Gordon-Litherland bound needs sigma(T0) = 1");
      if (!k.signature) throw Error(ErrorCode::MissingSignature, "no signature declared for " + k.name);
      Rational v = ratio_bound(*f, pi) + Rational(*k.signature, 2);
      return "b1(S) >= " + ratio_text(v);
    });
  }
  guarded("clasp number", [&] { return "clasp number c+ >= " + ratio_text(f_plus(k)); });
  guarded("unknotting number", [&] {
    UnknottingBound u = unknotting_bound(k, sigma);
    std::string s = "unknotting number >= " + ratio_text(u.bound) + " (tau = " + u.tau.to_string() +
                    ", reduced-model bound)";
    const char* base = k.ring() == Ring::BN ? "; <P,L>^" : "; <P,V>^";
    for (const auto& [n, ok] : u.annihilation)
      s += base + std::to_string(n) + " annihilates torsion: " + (ok ? "yes" : "no");
    return s;
  });
  return rows;
}

KnotModel connected_sum(const KnotModel& a, const KnotModel& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "connected sum of models over different rings");
  if (a.cycle.direction != b.cycle.direction)
    throw Error(ErrorCode::DirectionMismatch, "connected sum needs cycles pointing the same way (" +
                                                  std::string(direction_name(a.cycle.direction)) + " vs " +
                                                  std::string(direction_name(b.cycle.direction)) + ")");
  std::optional<int> sig;
  if (a.signature && b.signature) sig = *a.signature + *b.signature;
  return KnotModel(a.name + "#" + b.name, tensor(a.complex, b.complex),
                   tensor(a.complex, a.cycle, b.complex, b.cycle), sig);
}

bool map_injectivity(const LaurentMatrix& f) { return rank_over_fraction_field(f) == f.cols(); }

std::string invariant_report(const KnotModel& k, const BaseChange& sigma) {
  std::ostringstream out;
  const ChainComplex& c = k.complex;
  out << "knot: " << k.name << "\n";
  out << "ring: " << ring_name(k.ring()) << "\n";
  out << "complex: degrees " << c.lo() << ".." << c.hi() << ", ranks";
  for (auto r : c.ranks()) out << " " << r;
  out << "\n";
  out << "cycle: degree " << k.cycle.degree << ", genus " << k.cycle.genus << ", dplus " << k.cycle.dplus << ", "
      << direction_name(k.cycle.direction) << "\n";
  const char* zname = k.ring() == Ring::BN ? "z_BN" : "z_R";
  try {
    FractionalIdeal z = znat_ring(k);
    out << zname << " = " << z.to_string() << "\n";
    if (!k.expected_ideal.empty()) {
      std::string list;
      for (const auto& g : k.expected_ideal) list += (list.empty() ? "" : ",") + g;
      bool same = z.same_as(FractionalIdeal::parse(list, k.ring()));
      out << zname << " matches expected <" << list << ">: " << (same ? "yes" : "no") << "\n";
    }
  } catch (const Error& e) {
    out << zname << ": not available (" << e.name() << ")\n";
  }
  out << "base change: " << sigma.name() << "\n";
  try {
    auto [pi, lambda] = sigma.pi_lambda();
    out << "pi = " << pi.to_string() << "\n";
    out << "lambda = " << lambda.to_string() << "\n";
    ValuationIdeal z = znat(k, sigma);
    Value f = z.ord();
    out << "z_sigma = " << z.to_string() << "\n";
    bool is_b = sigma.name().rfind("B(", 0) == 0;
    out << (is_b ? "f_r = " : "f_sigma = ") << f.to_string() << "\n";
  } catch (const Error& e) {
    out << "f_sigma: not available (" << e.name() << ")\n";
  }
  try {
    out << "f_plus = " << f_plus(k).to_string() << "\n";
  } catch (const Error& e) {
    out << "f_plus: not available (" << e.name() << ")\n";
  }
  out << "bounds:\n";
  for (const auto& row : bounds(k, sigma)) {
    out << "  " << row.name << ": ";
    if (row.error.empty())
      out << row.statement << "\n";
    else
      out << "not available (" << row.error << ")\n";
  }
  return out.str();
}

}  // namespace concordia
