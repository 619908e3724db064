#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chiralkit/fock/lattice.hpp"

namespace chiralkit::fock {

/// Sparse vector over a Fock basis.
using State = std::map<std::size_t, Scalar>;

/// Exact sparse matrix stored by columns.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim) : cols_(dim) {}

  std::size_t dim() const { return cols_.size(); }
  void add(std::size_t row, std::size_t col, const Scalar& v);
  const State& column(std::size_t col) const { return cols_[col]; }

  State apply(const State& v) const;

  SparseOperator& operator+=(const SparseOperator& o);
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator*(const Scalar& s, SparseOperator a);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

 private:
  std::vector<State> cols_;
};

State add_states(State a, const State& b, const Scalar& scale = Scalar(1));

/// A basis monomial α^{c₁}_{−m₁}⋯α^{c_k}_{−m_k} e^a, stored as sorted
/// (color, mode) pairs with mode ≥ 1.
using Partition = std::vector<std::pair<int, int>>;

/// V_a truncated at level N: modes α^i_m with |m| ≤ N,
/// [α^i_m, α^j_n] = −½ g^{ij} m δ_{m,−n}, α^i_0 e^a = −½(g⁻¹a)^i e^a.
class FockTruncation {
 public:
  FockTruncation(const Matrix& g, Vec weight, int max_level);

  std::size_t colors() const { return g_.rows(); }
  int max_level() const { return max_level_; }
  std::size_t dim() const { return basis_.size(); }
  const Vec& weight() const { return weight_; }
  const Matrix& metric() const { return g_; }

  const Partition& basis(std::size_t k) const { return basis_[k]; }
  int level(std::size_t k) const { return levels_[k]; }
  std::vector<std::size_t> level_dimensions() const;
  /// Indices of basis vectors of level ≤ bound.
  std::vector<std::size_t> guarded(int bound) const;

  /// α^color_mode. Throws CutoffExceeded when |mode| > N.
  const SparseOperator& mode(int color, int mode) const;

 private:
  Matrix g_;
  Matrix ginv_;
  Vec weight_;
  int max_level_;
  std::vector<Partition> basis_;
  std::vector<int> levels_;
  std::map<Partition, std::size_t> index_;
  std::vector<SparseOperator> modes_;  // (color, mode + N)
};

FockTruncation build_fock(const LatticeModel& m, const Vec& weight, int max_level);

/// L_k = −Σ_m g_ij :α^i_{k−m} α^j_m:, summing over |k−m|, |m| ≤ N.
/// Throws CutoffExceeded when |k| > N.
SparseOperator virasoro_mode(const FockTruncation& f, int k);

/// (AB − BA)v.
State commutator_apply(const SparseOperator& a, const SparseOperator& b, const State& v);

/// L₀-eigenvalue of e^a, measured on the level-0 truncation.
Rational lowest_weight(const Matrix& g, const Vec& weight);

}  // namespace chiralkit::fock
