#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/field2.hpp"
#include "concordia/laurent.hpp"

namespace concordia {

/// Dense row-major matrix.  T needs + and *; the zero used for padding is
/// supplied at construction because Laurent zeros carry a ring tag.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill), zero_(fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return *zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, *zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::InvalidComplex, "matrix dimensions do not compose");
    Matrix out(rows_, o.cols_, *zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!is_zero(o(k, j))) out(i, j) = out(i, j) + a * o(k, j);
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::InvalidComplex, "vector length does not match matrix");
    std::vector<T> out(rows_, *zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(v[j]) && !is_zero((*this)(i, j))) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& e : data_)
      if (!is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  static bool is_zero(const T& a) { return a.is_zero(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
  std::optional<T> zero_;
};

using LaurentMatrix = Matrix<LaurentElement>;
using RFMatrix = Matrix<RationalFunction>;

inline LaurentMatrix laurent_zero_matrix(Ring ring, std::size_t rows, std::size_t cols) {
  return LaurentMatrix(rows, cols, LaurentElement::zero(ring));
}

inline LaurentMatrix laurent_identity(Ring ring, std::size_t n) {
  LaurentMatrix m = laurent_zero_matrix(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentElement::one(ring);
  return m;
}

/// Rank over the fraction field.
std::size_t rank_over_fraction_field(const LaurentMatrix& m);
/// Inverse over the Laurent ring; NotInvertible unless det is a monomial.
LaurentMatrix laurent_inverse(const LaurentMatrix& m);

}  // namespace concordia
