#include "concordia/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "concordia/error.hpp"

namespace concordia {

namespace {

constexpr std::array<Var, 8> kOrder = {Var::T0, Var::T1, Var::T2, Var::T3, Var::U0, Var::U1, Var::U2, Var::U3};

// Terms sorted in decreasing grevlex order.
using GPoly = std::vector<Monomial>;

bool greater(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; }

GPoly to_gpoly(const Poly2& p) {
  GPoly g = p.terms();
  std::sort(g.begin(), g.end(), greater);
  return g;
}

Poly2 to_poly(const GPoly& g) { return Poly2::from_terms(g); }

GPoly add(const GPoly& a, const GPoly& b) {
  GPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i], b[j]);
    if (c > 0) out.push_back(a[i++]);
    else if (c < 0) out.push_back(b[j++]);
    else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

GPoly times(const GPoly& a, const Monomial& m) {
  GPoly out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(t * m);
  return out;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

// Full reduction of f modulo g (all terms).  The working polynomial is kept in
// an ordered set so each step costs O(|g_k| log |f|).
GPoly reduce_full(const GPoly& input, const std::vector<GPoly>& g, std::optional<std::size_t> skip = std::nullopt) {
  std::set<Monomial, GrevlexGreater> f(input.begin(), input.end());
  auto toggle = [&f](const Monomial& m) {
    auto [it, inserted] = f.insert(m);
    if (!inserted) f.erase(it);
  };
  GPoly rem;
  while (!f.empty()) {
    const Monomial lt = *f.begin();
    bool reduced = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (skip && *skip == k) continue;
      if (g[k].front().divides(lt)) {
        Monomial q = lt / g[k].front();
        f.erase(f.begin());
        for (std::size_t t = 1; t < g[k].size(); ++t) toggle(g[k][t] * q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      f.erase(f.begin());
    }
  }
  return rem;
}

std::optional<unsigned> env_cap() {
  const char* s = std::getenv("CONCORDIA_GB_MAXDEG");
  if (!s || !*s) return std::nullopt;
  try {
    return static_cast<unsigned>(std::stoul(s));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string("CONCORDIA_GB_MAXDEG is not a number: ") + s);
  }
}

unsigned max_degree_of(const GPoly& g) {
  unsigned d = 0;
  for (const auto& m : g) d = std::max(d, grevlex_degree(m));
  return d;
}

}  // namespace

unsigned grevlex_degree(const Monomial& m) {
  unsigned d = 0;
  for (Var v : kOrder) d += m[v];
  return d;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = grevlex_degree(a), db = grevlex_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (auto it = kOrder.rbegin(); it != kOrder.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
  }
  return 0;
}

GroebnerBasis GroebnerBasis::compute(const std::vector<Poly2>& gens, std::optional<unsigned> max_degree) {
  if (!max_degree) max_degree = env_cap();
  for (const auto& p : gens)
    for (const auto& m : p.terms())
      for (std::size_t i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (m.exps[i] && std::find(kOrder.begin(), kOrder.end(), v) == kOrder.end())
          throw Error(ErrorCode::IntegrityError, "Groebner input uses variable " + std::string(var_name(v)));
      }
  auto check_cap = [&](const GPoly& g) {
    if (max_degree && max_degree_of(g) > *max_degree)
      throw Error(ErrorCode::GroebnerDegreeCap,
                  "Groebner basis element of degree " + std::to_string(max_degree_of(g)) + " exceeds cap " +
                      std::to_string(*max_degree));
  };

  std::vector<GPoly> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    GPoly r = reduce_full(to_gpoly(p), g);
    if (r.empty()) continue;
    check_cap(r);
    g.push_back(std::move(r));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push_back({i, j, g[i].front().lcm(g[j].front())});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!queue.empty()) {
    // normal selection strategy: smallest lcm first
    auto it = std::min_element(queue.begin(), queue.end(),
                               [](const Pair& a, const Pair& b) { return grevlex_compare(a.lcm, b.lcm) < 0; });
    Pair pr = *it;
    queue.erase(it);
    pending.erase({pr.i, pr.j});
    const Monomial& li = g[pr.i].front();
    const Monomial& lj = g[pr.j].front();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (g[k].front().divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;
    GPoly s = add(times(g[pr.i], pr.lcm / li), times(g[pr.j], pr.lcm / lj));
    GPoly r = reduce_full(std::move(s), g);
    if (r.empty()) continue;
    check_cap(r);
    g.push_back(std::move(r));
    add_pairs(g.size() - 1);
  }

  // minimal basis, then interreduce
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].front().divides(g[i].front()) && (g[j].front() != g[i].front() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GPoly tail(minimal[i].begin() + 1, minimal[i].end());
    GPoly rt = reduce_full(std::move(tail), minimal, i);
    GPoly head{minimal[i].front()};
    minimal[i] = add(head, rt);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const GPoly& a, const GPoly& b) { return grevlex_compare(a.front(), b.front()) < 0; });
  GroebnerBasis out;
  for (const auto& p : minimal) out.basis_.push_back(to_poly(p));
  out.sorted_ = std::move(minimal);
  return out;
}

Poly2 GroebnerBasis::reduce(const Poly2& f) const {
  return to_poly(reduce_full(to_gpoly(f), sorted_));
}

}  // namespace concordia
