#include "chiralkit/exactlin/alt_tensor.hpp"

#include <algorithm>

#include "chiralkit/errors.hpp"

namespace chiralkit::exactlin {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

int sort_with_sign(Index& idx) {
  int sign = 1;
  for (std::size_t a = 1; a < idx.size(); ++a)
    for (std::size_t b = a; b > 0 && idx[b - 1] > idx[b]; --b) {
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < idx.size(); ++a)
    if (idx[a] == idx[a - 1]) return 0;
  return sign;
}

AltTensor::AltTensor(std::size_t degree, std::size_t dim, std::size_t value_dim)
    : degree_(degree), dim_(dim), value_dim_(value_dim) {
  if (value_dim == 0) throw DimensionMismatch("value dimension must be positive");
}

void AltTensor::check_index(const Index& idx) const {
  if (idx.size() != degree_) throw DimensionMismatch("index tuple has the wrong length");
  for (auto i : idx)
    if (i >= dim_) throw DimensionMismatch("index out of range");
}

void AltTensor::store(Index sorted, std::vector<Scalar> value) {
  if (all_zero(value))
    entries_.erase(sorted);
  else
    entries_[std::move(sorted)] = std::move(value);
}

void AltTensor::set(Index idx, std::vector<Scalar> value) {
  check_index(idx);
  if (value.size() != value_dim_) throw DimensionMismatch("value has the wrong dimension");
  int sign = sort_with_sign(idx);
  if (sign == 0) {
    if (!all_zero(value)) throw DimensionMismatch("alternating tensor is zero on repeated indices");
    return;
  }
  if (sign < 0)
    for (auto& x : value) x = -x;
  store(std::move(idx), std::move(value));
}

std::vector<Scalar> AltTensor::value(Index idx) const {
  check_index(idx);
  int sign = sort_with_sign(idx);
  std::vector<Scalar> out(value_dim_);
  if (sign == 0) return out;
  auto it = entries_.find(idx);
  if (it == entries_.end()) return out;
  out = it->second;
  if (sign < 0)
    for (auto& x : out) x = -x;
  return out;
}

Scalar AltTensor::at(Index idx) const {
  if (value_dim_ != 1) throw DimensionMismatch("tensor is vector valued");
  return value(std::move(idx))[0];
}

AltTensor& AltTensor::operator+=(const AltTensor& o) {
  if (degree_ != o.degree_ || dim_ != o.dim_ || value_dim_ != o.value_dim_)
    throw DimensionMismatch("tensor shapes differ");
  for (const auto& [idx, v] : o.entries_) {
    std::vector<Scalar> cur = value(idx);
    for (std::size_t k = 0; k < v.size(); ++k) cur[k] += v[k];
    store(idx, std::move(cur));
  }
  return *this;
}

AltTensor& AltTensor::operator-=(const AltTensor& o) { return *this += Scalar(-1) * o; }

AltTensor operator*(const Scalar& s, AltTensor t) {
  if (s.is_zero()) {
    t.entries_.clear();
    return t;
  }
  for (auto& [idx, v] : t.entries_)
    for (auto& x : v) x *= s;
  return t;
}

AltTensor AltTensor::map_values(const Matrix& m) const {
  if (m.cols() != value_dim_) throw DimensionMismatch("value map has the wrong shape");
  AltTensor out(degree_, dim_, m.rows());
  for (const auto& [idx, v] : entries_) out.store(idx, m.apply(v));
  return out;
}

std::vector<Index> increasing_tuples(std::size_t k, std::size_t n) {
  std::vector<Index> out;
  if (k > n) return out;
  Index cur(k);
  for (std::size_t a = 0; a < k; ++a) cur[a] = a;
  while (true) {
    out.push_back(cur);
    std::size_t a = k;
    while (a > 0 && cur[a - 1] == n - k + (a - 1)) --a;
    if (a == 0) break;
    ++cur[a - 1];
    for (std::size_t b = a; b < k; ++b) cur[b] = cur[b - 1] + 1;
  }
  return out;
}

AltTensor alt_pullback_by_inverse(std::size_t k, const Matrix& mu_inv, const AltTensor& t) {
  if (t.degree() != k) throw DimensionMismatch("tensor degree differs from k");
  if (!mu_inv.is_square() || mu_inv.rows() != t.dim()) throw DimensionMismatch("map and tensor dimensions differ");
  AltTensor out(k, t.dim(), t.value_dim());
  // (pullback t)_a = sum over increasing b of t_b * det(mu_inv[b, a])
  for (const Index& a : increasing_tuples(k, t.dim())) {
    std::vector<Scalar> acc(t.value_dim());
    for (const auto& [b, vals] : t.entries()) {
      Scalar m = mu_inv.minor(b, a);
      if (m.is_zero()) continue;
      for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += m * vals[c];
    }
    out.set(a, std::move(acc));
  }
  return out;
}

AltTensor alt_pullback(std::size_t k, const Matrix& mu, const AltTensor& t) {
  return alt_pullback_by_inverse(k, mu.inverse(), t);
}

}  // namespace chiralkit::exactlin
