#include "concordia/homalg.hpp"

#include <algorithm>

#include "concordia/error.hpp"

namespace concordia {

std::string_view direction_name(Direction d) {
  return d == Direction::UnknotToK ? "unknot-to-K" : "K-to-unknot";
}

Direction direction_from_name(std::string_view name) {
  if (name == "unknot-to-K") return Direction::UnknotToK;
  if (name == "K-to-unknot") return Direction::KToUnknot;
  throw Error(ErrorCode::ParseError, "unknown cycle direction '" + std::string(name) + "'");
}

// ------------------------------------------------------------ ChainComplex

ChainComplex::ChainComplex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<LaurentMatrix> diffs)
    : ring_(ring), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) throw Error(ErrorCode::InvalidComplex, "complex needs at least one degree");
  if (diffs_.size() + 1 != ranks_.size())
    throw Error(ErrorCode::InvalidComplex, "expected one differential between each pair of adjacent degrees");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    const LaurentMatrix& d = diffs_[i];
    if (d.rows() != ranks_[i + 1] || d.cols() != ranks_[i])
      throw Error(ErrorCode::InvalidComplex, "differential into degree " + std::to_string(lo_ + static_cast<int>(i) + 1) +
                                                 " has the wrong shape");
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d(r, c).ring() != ring_) throw Error(ErrorCode::InvalidComplex, "differential entry in the wrong ring");
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
    if (!(diffs_[i + 1] * diffs_[i]).is_zero_matrix())
      throw Error(ErrorCode::InvalidComplex,
                  "d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(i) + 2));
}

ChainComplex ChainComplex::free_module(Ring ring, int degree, std::size_t rank) {
  return ChainComplex(ring, degree, {rank}, {});
}

std::size_t ChainComplex::rank(int k) const {
  if (k < lo_ || k > hi()) return 0;
  return ranks_[static_cast<std::size_t>(k - lo_)];
}

LaurentMatrix ChainComplex::differential(int k) const {
  if (k - 1 >= lo_ && k <= hi()) return diffs_[static_cast<std::size_t>(k - 1 - lo_)];
  return laurent_zero_matrix(ring_, rank(k), rank(k - 1));
}

void ChainComplex::check_cycle(const DistinguishedCycle& c) const {
  if (c.degree < lo_ || c.degree > hi())
    throw Error(ErrorCode::InvalidComplex, "cycle degree " + std::to_string(c.degree) + " is outside the complex");
  if (c.vector.size() != rank(c.degree))
    throw Error(ErrorCode::InvalidComplex, "cycle has " + std::to_string(c.vector.size()) +
                                               " coordinates but C^" + std::to_string(c.degree) + " has rank " +
                                               std::to_string(rank(c.degree)));
  for (const auto& e : c.vector)
    if (e.ring() != ring_) throw Error(ErrorCode::InvalidComplex, "cycle coordinate in the wrong ring");
  if (c.genus < 0 || c.dplus < 0) throw Error(ErrorCode::InvalidComplex, "genus and dplus must be non-negative");
  if (c.direction == Direction::UnknotToK) {
    for (const auto& e : differential(c.degree + 1).apply(c.vector))
      if (!e.is_zero()) throw Error(ErrorCode::InvalidComplex, "distinguished vector is not a cycle");
  } else {
    auto t = differential(c.degree).transpose().apply(c.vector);
    for (const auto& e : t)
      if (!e.is_zero()) throw Error(ErrorCode::InvalidComplex, "distinguished covector does not vanish on boundaries");
  }
}

// ------------------------------------------------------------ constructions

namespace {

void paste(LaurentMatrix& dst, const LaurentMatrix& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

LaurentMatrix map_component(const ChainMap& f, int k, Ring ring, std::size_t rows, std::size_t cols) {
  auto it = f.find(k);
  if (it == f.end()) return laurent_zero_matrix(ring, rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw Error(ErrorCode::NotAChainMap, "chain map component in degree " + std::to_string(k) + " has the wrong shape");
  return it->second;
}

}  // namespace

ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& a, const ChainComplex& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "mapping cone across rings");
  Ring ring = a.ring();
  for (const auto& [k, m] : f)
    if (m.rows() != b.rank(k) || m.cols() != a.rank(k))
      throw Error(ErrorCode::NotAChainMap, "chain map component in degree " + std::to_string(k) + " has the wrong shape");
  for (int k = std::min(a.lo(), b.lo()) - 1; k <= std::max(a.hi(), b.hi()); ++k) {
    LaurentMatrix fk = map_component(f, k, ring, b.rank(k), a.rank(k));
    LaurentMatrix fk1 = map_component(f, k + 1, ring, b.rank(k + 1), a.rank(k + 1));
    if (!(b.differential(k + 1) * fk == fk1 * a.differential(k + 1)))
      throw Error(ErrorCode::NotAChainMap, "map does not commute with differentials at degree " + std::to_string(k));
  }
  int lo = std::min(a.lo(), b.lo() + 1), hi = std::max(a.hi(), b.hi() + 1);
  std::vector<std::size_t> ranks;
  for (int k = lo; k <= hi; ++k) ranks.push_back(a.rank(k) + b.rank(k - 1));
  std::vector<LaurentMatrix> diffs;
  for (int k = lo + 1; k <= hi; ++k) {
    LaurentMatrix d = laurent_zero_matrix(ring, a.rank(k) + b.rank(k - 1), a.rank(k - 1) + b.rank(k - 2));
    paste(d, a.differential(k), 0, 0);
    paste(d, map_component(f, k - 1, ring, b.rank(k - 1), a.rank(k - 1)), a.rank(k), 0);
    paste(d, b.differential(k - 1), a.rank(k), a.rank(k - 1));
    diffs.push_back(std::move(d));
  }
  return ChainComplex(ring, lo, std::move(ranks), std::move(diffs));
}

ChainComplex change_basis(const ChainComplex& c, int degree, const LaurentMatrix& m) {
  if (m.rows() != c.rank(degree) || m.cols() != c.rank(degree))
    throw Error(ErrorCode::NotInvertible, "basis change matrix has the wrong size");
  LaurentMatrix minv = laurent_inverse(m);
  std::vector<LaurentMatrix> diffs = c.diffs();
  for (int k = c.lo() + 1; k <= c.hi(); ++k) {
    auto& d = diffs[static_cast<std::size_t>(k - 1 - c.lo())];
    if (k == degree) d = minv * d;
    if (k - 1 == degree) d = d * m;
  }
  return ChainComplex(c.ring(), c.lo(), c.ranks(), std::move(diffs));
}

DistinguishedCycle change_basis(const DistinguishedCycle& cycle, int degree, const LaurentMatrix& m) {
  if (cycle.degree != degree) return cycle;
  DistinguishedCycle out = cycle;
  if (cycle.direction == Direction::UnknotToK)
    out.vector = laurent_inverse(m).apply(cycle.vector);
  else
    out.vector = m.transpose().apply(cycle.vector);
  return out;
}

namespace {

// Offsets of the (i, j) blocks inside total degree n = i + j.
struct TensorLayout {
  const ChainComplex& c;
  const ChainComplex& d;

  std::size_t offset(int i, int j) const {
    std::size_t off = 0;
    for (int a = c.lo(); a < i; ++a) off += c.rank(a) * d.rank(i + j - a);
    return off;
  }
  std::size_t total(int n) const {
    std::size_t t = 0;
    for (int a = c.lo(); a <= c.hi(); ++a) t += c.rank(a) * d.rank(n - a);
    return t;
  }
};

}  // namespace

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  if (c.ring() != d.ring()) throw Error(ErrorCode::RingMismatch, "tensor product across rings");
  Ring ring = c.ring();
  TensorLayout lay{c, d};
  int lo = c.lo() + d.lo(), hi = c.hi() + d.hi();
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(lay.total(n));
  std::vector<LaurentMatrix> diffs;
  for (int n = lo; n < hi; ++n) {
    LaurentMatrix m = laurent_zero_matrix(ring, lay.total(n + 1), lay.total(n));
    for (int i = c.lo(); i <= c.hi(); ++i) {
      int j = n - i;
      std::size_t rc = c.rank(i), rd = d.rank(j);
      if (rc == 0 || rd == 0) continue;
      std::size_t src = lay.offset(i, j);
      if (i + 1 <= c.hi()) {
        LaurentMatrix dc = c.differential(i + 1);
        std::size_t dst = lay.offset(i + 1, j);
        for (std::size_t a2 = 0; a2 < dc.rows(); ++a2)
          for (std::size_t a = 0; a < rc; ++a) {
            if (dc(a2, a).is_zero()) continue;
            for (std::size_t b = 0; b < rd; ++b) m(dst + a2 * rd + b, src + a * rd + b) += dc(a2, a);
          }
      }
      if (j + 1 <= d.hi()) {
        LaurentMatrix dd = d.differential(j + 1);
        std::size_t dst = lay.offset(i, j + 1);
        std::size_t rd1 = d.rank(j + 1);
        for (std::size_t a = 0; a < rc; ++a)
          for (std::size_t b2 = 0; b2 < dd.rows(); ++b2)
            for (std::size_t b = 0; b < rd; ++b) {
              if (dd(b2, b).is_zero()) continue;
              m(dst + a * rd1 + b2, src + a * rd + b) += dd(b2, b);
            }
      }
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex(ring, lo, std::move(ranks), std::move(diffs));
}

DistinguishedCycle tensor(const ChainComplex& c, const DistinguishedCycle& x, const ChainComplex& d,
                          const DistinguishedCycle& y) {
  if (x.direction != y.direction)
    throw Error(ErrorCode::DirectionMismatch, "cannot tensor a cycle with a covector");
  c.check_cycle(x);
  d.check_cycle(y);
  TensorLayout lay{c, d};
  DistinguishedCycle out;
  out.degree = x.degree + y.degree;
  out.direction = x.direction;
  out.genus = x.genus + y.genus;
  out.dplus = x.dplus + y.dplus;
  out.vector.assign(lay.total(out.degree), LaurentElement::zero(c.ring()));
  std::size_t off = lay.offset(x.degree, y.degree);
  for (std::size_t a = 0; a < x.vector.size(); ++a)
    for (std::size_t b = 0; b < y.vector.size(); ++b) out.vector[off + a * y.vector.size() + b] = x.vector[a] * y.vector[b];
  return out;
}

ChainComplex dualize(const ChainComplex& c) {
  std::vector<std::size_t> ranks(c.ranks().rbegin(), c.ranks().rend());
  std::vector<LaurentMatrix> diffs;
  for (auto it = c.diffs().rbegin(); it != c.diffs().rend(); ++it) diffs.push_back(it->transpose());
  return ChainComplex(c.ring(), -c.hi(), std::move(ranks), std::move(diffs));
}

DistinguishedCycle dualize(const DistinguishedCycle& cycle) {
  DistinguishedCycle out = cycle;
  out.degree = -cycle.degree;
  out.direction = cycle.direction == Direction::UnknotToK ? Direction::KToUnknot : Direction::UnknotToK;
  return out;
}

// ------------------------------------------------------------ valuation side

RFMatrix apply_matrix(const BaseChange& sigma, const LaurentMatrix& m) {
  RFMatrix out(m.rows(), m.cols(), RationalFunction());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = sigma.apply(m(i, j));
  return out;
}

namespace {

void row_swap(RFMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void col_swap(RFMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// y <- E y for a recorded row operation E
void apply_row_op(std::vector<RationalFunction>& y, const Diagonalization::Op& op) {
  if (op.kind == Diagonalization::Op::RowSwap) std::swap(y[op.i], y[op.j]);
  else if (op.kind == Diagonalization::Op::RowAdd && !y[op.j].is_zero()) y[op.i] += op.t * y[op.j];
}

// m <- m E^-1 for a recorded row operation E (over F2, E^-1 = E for transvections)
void apply_row_op_inverse_on_columns(RFMatrix& m, const Diagonalization::Op& op) {
  if (op.kind == Diagonalization::Op::RowSwap) {
    col_swap(m, op.i, op.j);
  } else if (op.kind == Diagonalization::Op::RowAdd) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, op.i).is_zero()) m(r, op.j) += op.t * m(r, op.i);
  }
}

// y <- G^-1 y for a recorded column operation G
void apply_col_op_inverse(std::vector<RationalFunction>& y, const Diagonalization::Op& op) {
  if (op.kind == Diagonalization::Op::ColSwap) std::swap(y[op.i], y[op.j]);
  else if (op.kind == Diagonalization::Op::ColAdd && !y[op.i].is_zero()) y[op.j] += op.t * y[op.i];
}

}  // namespace

Diagonalization diagonalize(const RFMatrix& input, const MonomialWeight& w) {
  Diagonalization out;
  RFMatrix m = input;
  std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    std::optional<Value> best;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = s; i < rows; ++i)
      for (std::size_t j = s; j < cols; ++j) {
        if (m(i, j).is_zero()) continue;
        Value v = ord_rf(m(i, j), w);
        if (!best || v < *best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (!best) break;
    if (pr != s) {
      row_swap(m, pr, s);
      out.ops.push_back({Diagonalization::Op::RowSwap, pr, s, RationalFunction()});
    }
    if (pc != s) {
      col_swap(m, pc, s);
      out.ops.push_back({Diagonalization::Op::ColSwap, pc, s, RationalFunction()});
    }
    RationalFunction pinv = m(s, s).inverse();
    for (std::size_t i = s + 1; i < rows; ++i) {
      if (m(i, s).is_zero()) continue;
      RationalFunction t = m(i, s) * pinv;
      for (std::size_t j = s; j < cols; ++j)
        if (!m(s, j).is_zero()) m(i, j) += t * m(s, j);
      out.ops.push_back({Diagonalization::Op::RowAdd, i, s, t});
    }
    for (std::size_t j = s + 1; j < cols; ++j) {
      if (m(s, j).is_zero()) continue;
      RationalFunction t = m(s, j) * pinv;
      m(s, j) = RationalFunction();
      out.ops.push_back({Diagonalization::Op::ColAdd, j, s, t});
    }
    out.pivot_ords.push_back(*best);
    ++out.rank;
  }
  out.result = std::move(m);
  return out;
}

std::vector<Value> elementary_divisor_ords(const RFMatrix& m, const MonomialWeight& w) {
  std::vector<Value> ords = diagonalize(m, w).pivot_ords;
  std::sort(ords.begin(), ords.end(), [](const Value& a, const Value& b) { return a > b; });
  return ords;
}

const DegreeHomology& HomologySummary::at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return d;
  throw Error(ErrorCode::InvalidComplex, "no homology recorded in degree " + std::to_string(degree));
}

HomologySummary homology_over_valuation(const ChainComplex& c, const BaseChange& sigma,
                                        const DistinguishedCycle* cycle) {
  const MonomialWeight& w = sigma.weight();
  HomologySummary out;
  std::map<int, Diagonalization> incoming;
  for (int k = c.lo(); k <= c.hi() + 1; ++k) incoming[k] = diagonalize(apply_matrix(sigma, c.differential(k)), w);
  Value zero = Value::zero(w.kind());
  for (int k = c.lo(); k <= c.hi(); ++k) {
    DegreeHomology h;
    h.degree = k;
    h.ambient_rank = c.rank(k);
    h.free_rank = c.rank(k) - incoming[k].rank - incoming[k + 1].rank;
    for (const auto& v : incoming[k].pivot_ords)
      if (v > zero) h.torsion.push_back(v);
    std::sort(h.torsion.begin(), h.torsion.end(), [](const Value& a, const Value& b) { return a > b; });
    out.degrees.push_back(std::move(h));
  }
  if (!cycle) return out;

  c.check_cycle(*cycle);
  int k = cycle->degree;
  if (out.at(k).free_rank != 1)
    throw Error(ErrorCode::RankNotOne, "homology in degree " + std::to_string(k) + " has free rank " +
                                           std::to_string(out.at(k).free_rank) + ", expected 1");
  std::vector<RationalFunction> y;
  for (const auto& e : cycle->vector) y.push_back(sigma.apply(e));
  std::size_t n = y.size();

  if (cycle->direction == Direction::UnknotToK) {
    const Diagonalization& din = incoming[k];
    RFMatrix dout = apply_matrix(sigma, c.differential(k + 1));
    for (const auto& op : din.ops) {
      apply_row_op(y, op);
      apply_row_op_inverse_on_columns(dout, op);
    }
    std::size_t r = din.rank;
    for (std::size_t i = 0; i < r; ++i) out.torsion_components.push_back(y[i]);
    // restrict d_out to the complement of the image directions
    RFMatrix a(dout.rows(), n - r, RationalFunction());
    for (std::size_t i = 0; i < dout.rows(); ++i)
      for (std::size_t j = r; j < n; ++j) a(i, j - r) = dout(i, j);
    std::vector<RationalFunction> tail(y.begin() + static_cast<std::ptrdiff_t>(r), y.end());
    Diagonalization da = diagonalize(a, w);
    for (const auto& op : da.ops) apply_col_op_inverse(tail, op);
    for (std::size_t i = 0; i < da.rank; ++i)
      if (!tail[i].is_zero()) throw Error(ErrorCode::IntegrityError, "cycle has a component outside the kernel");
    RationalFunction coeff = tail[da.rank];
    if (coeff.is_zero()) throw Error(ErrorCode::CycleInTorsion, "the distinguished cycle is torsion in homology");
    out.cycle_coefficient = coeff;
  } else {
    RFMatrix dout = apply_matrix(sigma, c.differential(k + 1));
    Diagonalization dd = diagonalize(dout, w);
    // columns of W = product of the recorded column operations, applied to the identity
    RFMatrix basis(n, n, RationalFunction());
    for (std::size_t i = 0; i < n; ++i) basis(i, i) = RationalFunction::one();
    for (const auto& op : dd.ops) {
      if (op.kind == Diagonalization::Op::ColSwap) {
        col_swap(basis, op.i, op.j);
      } else if (op.kind == Diagonalization::Op::ColAdd) {
        for (std::size_t r = 0; r < n; ++r)
          if (!basis(r, op.j).is_zero()) basis(r, op.i) += op.t * basis(r, op.j);
      }
    }
    std::optional<RationalFunction> best;
    std::optional<Value> best_ord;
    for (std::size_t j = dd.rank; j < n; ++j) {
      RationalFunction v;
      for (std::size_t i = 0; i < n; ++i)
        if (!y[i].is_zero() && !basis(i, j).is_zero()) v += y[i] * basis(i, j);
      if (v.is_zero()) continue;
      Value o = ord_rf(v, w);
      if (!best_ord || o < *best_ord) {
        best = v;
        best_ord = o;
      }
    }
    if (!best) throw Error(ErrorCode::CycleInTorsion, "the distinguished covector vanishes on all cycles");
    out.cycle_coefficient = *best;
  }
  return out;
}

}  // namespace concordia
