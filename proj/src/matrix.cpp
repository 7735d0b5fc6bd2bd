#include "concordia/matrix.hpp"

#include <utility>

namespace concordia {

namespace {

using FracMatrix = std::vector<std::vector<LaurentFraction>>;

FracMatrix to_fractions(const LaurentMatrix& m) {
  FracMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].emplace_back(m(i, j));
  return out;
}

}  // namespace

std::size_t rank_over_fraction_field(const LaurentMatrix& m) {
  FracMatrix a = to_fractions(m);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    LaurentFraction inv = a[rank][c].inverse();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][c].is_zero()) continue;
      LaurentFraction t = a[i][c] * inv;
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = a[i][j] + t * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

LaurentMatrix laurent_inverse(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotInvertible, "basis change matrix is not square");
  std::size_t n = m.rows();
  Ring ring = m.zero().ring();
  FracMatrix a = to_fractions(m);
  FracMatrix inv(n, std::vector<LaurentFraction>(n, LaurentFraction(ring)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = LaurentFraction(LaurentElement::one(ring));
  LaurentFraction det(LaurentElement::one(ring));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::NotInvertible, "basis change matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    det = det * a[c][c];
    LaurentFraction pinv = a[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * pinv;
      inv[c][j] = inv[c][j] * pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      LaurentFraction t = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = a[i][j] + t * a[c][j];
        inv[i][j] = inv[i][j] + t * inv[c][j];
      }
    }
  }
  if (!det.is_laurent() || !det.numerator().is_monomial())
    throw Error(ErrorCode::NotInvertible, "determinant " + det.to_string() + " is not a unit");
  LaurentMatrix out = laurent_zero_matrix(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!inv[i][j].is_laurent())
        throw Error(ErrorCode::IntegrityError, "inverse of a unimodular matrix is not Laurent");
      out(i, j) = inv[i][j].numerator();
    }
  return out;
}

}  // namespace concordia
