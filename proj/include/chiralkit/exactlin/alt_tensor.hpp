#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "chiralkit/exactlin/matrix.hpp"

namespace chiralkit::exactlin {

using Index = std::vector<std::size_t>;

/// Sorts idx in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_with_sign(Index& idx);

/// Alternating k-form on an n-dimensional space with values in Q(i)^m.
/// Stored by strictly increasing 0-based index tuples; zero entries are dropped.
class AltTensor {
 public:
  AltTensor() = default;
  AltTensor(std::size_t degree, std::size_t dim, std::size_t value_dim = 1);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t value_dim() const { return value_dim_; }
  const std::map<Index, std::vector<Scalar>>& entries() const { return entries_; }

  /// Sets the value on idx (any order; the alternating sign is applied).
  void set(Index idx, std::vector<Scalar> value);
  void set(Index idx, const Scalar& value) { set(std::move(idx), std::vector<Scalar>{value}); }

  /// Value on an arbitrary tuple of basis vectors.
  std::vector<Scalar> value(Index idx) const;
  Scalar at(Index idx) const;

  bool is_zero() const { return entries_.empty(); }

  AltTensor& operator+=(const AltTensor& o);
  AltTensor& operator-=(const AltTensor& o);
  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
  friend AltTensor operator*(const Scalar& s, AltTensor t);
  friend bool operator==(const AltTensor& a, const AltTensor& b) = default;

  /// Applies a linear map to every value vector.
  AltTensor map_values(const Matrix& m) const;

 private:
  void check_index(const Index& idx) const;
  void store(Index sorted, std::vector<Scalar> value);

  std::size_t degree_ = 0;
  std::size_t dim_ = 0;
  std::size_t value_dim_ = 1;
  std::map<Index, std::vector<Scalar>> entries_;
};

/// All strictly increasing k-tuples in 0..n-1.
std::vector<Index> increasing_tuples(std::size_t k, std::size_t n);

/// Pullback along mu^{-1}: the result evaluated on (a_1..a_k) equals
/// t(mu^{-1} a_1, ..., mu^{-1} a_k), where mu sends e_j to sum_i mu(i,j) e_i.
/// Values are not transformed. Throws SingularMatrix.
AltTensor alt_pullback(std::size_t k, const Matrix& mu, const AltTensor& t);

/// Same, with mu^{-1} supplied directly.
AltTensor alt_pullback_by_inverse(std::size_t k, const Matrix& mu_inv, const AltTensor& t);

}  // namespace chiralkit::exactlin
