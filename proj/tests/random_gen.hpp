#pragma once

#include <random>
#include <vector>

#include "concordia/field2.hpp"
#include "concordia/laurent.hpp"

namespace gen {

inline concordia::Poly2 poly(std::mt19937_64& rng, const std::vector<concordia::Var>& vars,
                             int max_terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::vector<concordia::Monomial> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    concordia::Monomial m;
    for (auto v : vars) m.exps[concordia::index(v)] = static_cast<concordia::Exponent>(ex(rng));
    terms.push_back(m);
  }
  return concordia::Poly2::from_terms(terms);
}

inline concordia::Poly2 nonzero_poly(std::mt19937_64& rng, const std::vector<concordia::Var>& vars,
                                     int max_terms = 4, int max_exp = 3) {
  concordia::Poly2 p;
  do p = poly(rng, vars, max_terms, max_exp);
  while (p.is_zero());
  return p;
}

inline concordia::LaurentElement laurent(std::mt19937_64& rng, concordia::Ring ring, int max_terms = 4,
                                         int max_abs = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> ex(-max_abs, max_abs);
  std::vector<concordia::LaurentExponents> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({ex(rng), ex(rng), ex(rng), ex(rng)});
  return concordia::LaurentElement::from_terms(ring, terms);
}

}  // namespace gen
