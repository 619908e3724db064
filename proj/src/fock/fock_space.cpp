#include "chiralkit/fock/fock_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "chiralkit/errors.hpp"

namespace chiralkit::fock {

void SparseOperator::add(std::size_t row, std::size_t col, const Scalar& v) {
  if (v.is_zero()) return;
  State& c = cols_[col];
  Scalar& slot = c[row];
  slot += v;
  if (slot.is_zero()) c.erase(row);
}

State add_states(State a, const State& b, const Scalar& scale) {
  for (const auto& [k, v] : b) {
    Scalar& slot = a[k];
    slot += scale * v;
    if (slot.is_zero()) a.erase(k);
  }
  return a;
}

State SparseOperator::apply(const State& v) const {
  State out;
  for (const auto& [col, x] : v)
    for (const auto& [row, a] : cols_[col]) {
      Scalar& slot = out[row];
      slot += a * x;
      if (slot.is_zero()) out.erase(row);
    }
  return out;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  if (o.dim() != dim()) throw DimensionMismatch("operator sizes differ");
  for (std::size_t c = 0; c < dim(); ++c) cols_[c] = add_states(std::move(cols_[c]), o.cols_[c]);
  return *this;
}

SparseOperator operator*(const Scalar& s, SparseOperator a) {
  for (auto& col : a.cols_) {
    if (s.is_zero()) col.clear();
    for (auto& [row, v] : col) v *= s;
  }
  return a;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operator sizes differ");
  SparseOperator out(a.dim());
  for (std::size_t c = 0; c < b.dim(); ++c) out.cols_[c] = a.apply(b.cols_[c]);
  return out;
}

FockTruncation::FockTruncation(const Matrix& g, Vec weight, int max_level)
    : g_(g), ginv_(g.inverse()), weight_(std::move(weight)), max_level_(max_level) {
  if (max_level < 0) throw MathError("level cutoff must be nonnegative");
  if (weight_.size() != g_.rows()) throw DimensionMismatch("weight does not match the metric");
  const int n = static_cast<int>(colors());

  // Part types ordered by (color, mode); a partition is a sorted multiset.
  std::vector<std::pair<int, int>> parts;
  for (int c = 0; c < n; ++c)
    for (int m = 1; m <= max_level; ++m) parts.emplace_back(c, m);
  std::vector<std::vector<Partition>> by_level(static_cast<std::size_t>(max_level) + 1);
  Partition cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int level) {
    if (k == parts.size()) {
      by_level[static_cast<std::size_t>(level)].push_back(cur);
      return;
    }
    rec(k + 1, level);
    const int m = parts[k].second;
    int pushed = 0;
    while (level + m * (pushed + 1) <= max_level) {
      cur.push_back(parts[k]);
      ++pushed;
      rec(k + 1, level + m * pushed);
    }
    cur.resize(cur.size() - static_cast<std::size_t>(pushed));
  };
  rec(0, 0);
  for (int lv = 0; lv <= max_level; ++lv) {
    auto& list = by_level[static_cast<std::size_t>(lv)];
    std::sort(list.begin(), list.end());
    for (auto& p : list) {
      index_.emplace(p, basis_.size());
      basis_.push_back(std::move(p));
      levels_.push_back(lv);
    }
  }

  const Scalar half(Rational(1, 2));
  const Vec zero_mode = ginv_.apply(weight_);
  const int span = 2 * max_level + 1;
  modes_.assign(static_cast<std::size_t>(n * span), SparseOperator(dim()));
  for (int c = 0; c < n; ++c)
    for (int m = -max_level; m <= max_level; ++m) {
      SparseOperator& op = modes_[static_cast<std::size_t>(c * span + m + max_level)];
      for (std::size_t col = 0; col < dim(); ++col) {
        const Partition& p = basis_[col];
        if (m == 0) {
          op.add(col, col, -half * zero_mode[static_cast<std::size_t>(c)]);
        } else if (m < 0) {
          if (levels_[col] - m > max_level) continue;
          Partition q = p;
          q.insert(std::upper_bound(q.begin(), q.end(), std::make_pair(c, -m)), std::make_pair(c, -m));
          op.add(index_.at(q), col, Scalar(1));
        } else {
          for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k].second != m) continue;
            const Scalar& gij = ginv_(static_cast<std::size_t>(c), static_cast<std::size_t>(p[k].first));
            if (gij.is_zero()) continue;
            Partition q = p;
            q.erase(q.begin() + static_cast<long>(k));
            op.add(index_.at(q), col, -half * gij * Scalar(m));
          }
        }
      }
    }
}

std::vector<std::size_t> FockTruncation::level_dimensions() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_level_) + 1);
  for (int lv : levels_) ++out[static_cast<std::size_t>(lv)];
  return out;
}

std::vector<std::size_t> FockTruncation::guarded(int bound) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dim(); ++k)
    if (levels_[k] <= bound) out.push_back(k);
  return out;
}

const SparseOperator& FockTruncation::mode(int color, int m) const {
  if (std::abs(m) > max_level_) throw CutoffExceeded("mode index exceeds the truncation level");
  if (color < 0 || color >= static_cast<int>(colors())) throw DimensionMismatch("mode color out of range");
  return modes_[static_cast<std::size_t>(color * (2 * max_level_ + 1) + m + max_level_)];
}

FockTruncation build_fock(const LatticeModel& m, const Vec& weight, int max_level) {
  return FockTruncation(m.g, weight, max_level);
}

SparseOperator virasoro_mode(const FockTruncation& f, int k) {
  const int n_max = f.max_level();
  if (std::abs(k) > n_max) throw CutoffExceeded("Virasoro mode exceeds the truncation level");
  const int n = static_cast<int>(f.colors());
  SparseOperator out(f.dim());
  for (int m = -n_max; m <= n_max; ++m) {
    const int other = k - m;
    if (std::abs(other) > n_max) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& gij = f.metric()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (gij.is_zero()) continue;
        // annihilators to the right
        const SparseOperator& left = other <= m ? f.mode(i, other) : f.mode(j, m);
        const SparseOperator& right = other <= m ? f.mode(j, m) : f.mode(i, other);
        out += -gij * (left * right);
      }
  }
  return out;
}

State commutator_apply(const SparseOperator& a, const SparseOperator& b, const State& v) {
  return add_states(a.apply(b.apply(v)), b.apply(a.apply(v)), Scalar(-1));
}

Rational lowest_weight(const Matrix& g, const Vec& weight) {
  const FockTruncation f(g, weight, 0);
  const State image = virasoro_mode(f, 0).apply(State{{0, Scalar(1)}});
  auto it = image.find(0);
  return it == image.end() ? Rational(0) : it->second.re();
}

}  // namespace chiralkit::fock
