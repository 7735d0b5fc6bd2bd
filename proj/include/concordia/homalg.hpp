#pragma once

// Cochain-style complexes of free modules over R or S_BN.  Differentials
// raise degree: d^k maps C^(k-1) to C^k and is stored as a
// rank(C^k) x rank(C^(k-1)) matrix (columns are images of generators).

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "concordia/basechange.hpp"
#include "concordia/laurent.hpp"
#include "concordia/matrix.hpp"
#include "concordia/valuation.hpp"

namespace concordia {

enum class Direction : std::uint8_t { UnknotToK, KToUnknot };

std::string_view direction_name(Direction d);
Direction direction_from_name(std::string_view name);

/// For UnknotToK, `vector` is a cycle in C^degree.  For KToUnknot it is a
/// covector C^degree -> ring vanishing on boundaries.
struct DistinguishedCycle {
  int degree = 0;
  std::vector<LaurentElement> vector;
  int genus = 0;
  int dplus = 0;
  Direction direction = Direction::UnknotToK;

  bool operator==(const DistinguishedCycle&) const = default;
};

class ChainComplex {
 public:
  /// diffs[i] maps C^(lo+i) to C^(lo+i+1).  Throws InvalidComplex on
  /// dimension mismatches, ring mismatches or d*d != 0.
  ChainComplex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<LaurentMatrix> diffs);

  /// Free module of the given rank concentrated in one degree.
  static ChainComplex free_module(Ring ring, int degree, std::size_t rank);

  Ring ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const;
  /// d^k : C^(k-1) -> C^k (a zero matrix outside the stored range).
  LaurentMatrix differential(int k) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<LaurentMatrix>& diffs() const { return diffs_; }

  /// InvalidComplex unless the cycle lives in a stored degree, has the right
  /// length and ring, and is closed (cycle) or vanishes on boundaries (covector).
  void check_cycle(const DistinguishedCycle& c) const;

  bool operator==(const ChainComplex&) const = default;

 private:
  Ring ring_;
  int lo_;
  std::vector<std::size_t> ranks_;
  std::vector<LaurentMatrix> diffs_;
};

/// Components f^k : A^k -> B^k; absent degrees are zero.
using ChainMap = std::map<int, LaurentMatrix>;

/// cone^k = A^k + B^(k-1) with d(a, b) = (d a, f a + d b); A generators come
/// first.  Throws NotAChainMap.
ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);

/// Replaces the basis of C^degree by the columns of m (old coordinates).
ChainComplex change_basis(const ChainComplex& c, int degree, const LaurentMatrix& m);
DistinguishedCycle change_basis(const DistinguishedCycle& cycle, int degree, const LaurentMatrix& m);

/// Total complex of C (x) D; block (i, j) generators ordered by i, then
/// index a * rank(D^j) + b.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);
/// Tensor of two cycles (or two covectors); genus and dplus add.
DistinguishedCycle tensor(const ChainComplex& c, const DistinguishedCycle& x, const ChainComplex& d,
                          const DistinguishedCycle& y);

/// Hom(C, ring): transposed differentials, negated degrees.
ChainComplex dualize(const ChainComplex& c);
/// Cycle becomes covector at the negated degree and vice versa.
DistinguishedCycle dualize(const DistinguishedCycle& cycle);

RFMatrix apply_matrix(const BaseChange& sigma, const LaurentMatrix& m);

/// Result of diagonalizing a matrix over the valuation ring by min-ord pivots.
struct Diagonalization {
  struct Op {
    enum Kind : std::uint8_t { RowSwap, ColSwap, RowAdd, ColAdd } kind;
    std::size_t i, j;
    RationalFunction t;  // RowAdd: row_i += t row_j; ColAdd: col_i += t col_j
  };
  std::size_t rank = 0;
  std::vector<Value> pivot_ords;  // in pivot order
  std::vector<Op> ops;
  RFMatrix result;  // diagonal, pivots in the leading positions
};

Diagonalization diagonalize(const RFMatrix& m, const MonomialWeight& w);
/// Ords of the nonzero elementary divisors, sorted descending.
std::vector<Value> elementary_divisor_ords(const RFMatrix& m, const MonomialWeight& w);

struct DegreeHomology {
  int degree = 0;
  std::size_t ambient_rank = 0;
  std::size_t free_rank = 0;
  std::vector<Value> torsion;  // ords > 0, descending
};

struct HomologySummary {
  std::vector<DegreeHomology> degrees;
  /// UnknotToK: free coefficient c of the cycle's class.  KToUnknot: a
  /// generator of the image of the covector on cycles.
  std::optional<RationalFunction> cycle_coefficient;
  /// Coordinates of the cycle along torsion generators (UnknotToK only).
  std::vector<RationalFunction> torsion_components;

  const DegreeHomology& at(int degree) const;
};

/// Throws RankNotOne / CycleInTorsion when a cycle is given and its degree
/// does not have free rank one, or its class has no free part.
HomologySummary homology_over_valuation(const ChainComplex& c, const BaseChange& sigma,
                                        const DistinguishedCycle* cycle = nullptr);

}  // namespace concordia
