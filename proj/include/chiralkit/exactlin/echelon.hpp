#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chiralkit/exactlin/scalar.hpp"

namespace chiralkit::exactlin {

/// Incrementally built echelon basis of a subspace of a sparse vector space
/// whose coordinates are ordered keys. The pivot of each stored row is its
/// greatest key, so the set of pivots is the set of leading keys of the span.
/// Every stored row remembers which inserted vectors it combines, which lets
/// solve() express a target in terms of the inserted generators.
template <class Key, class Less = std::less<Key>>
class EchelonBasis {
 public:
  using Vec = std::map<Key, Scalar, Less>;
  using Combination = std::map<std::size_t, Scalar>;

  /// Inserts generator number `tag`. Returns false if it is dependent.
  bool insert(Vec v, std::size_t tag) {
    Combination combo{{tag, Scalar(1)}};
    reduce_in_place(v, combo);
    if (v.empty()) return false;
    auto pivot = std::prev(v.end())->first;
    rows_.push_back(Row{std::move(v), std::move(pivot), std::move(combo)});
    return true;
  }

  /// Canonical remainder of v modulo the span.
  Vec reduce(Vec v) const {
    Combination combo;
    reduce_in_place(v, combo);
    return v;
  }

  /// Coefficients c with sum c[tag] * generator[tag] == target, using only
  /// independent generators (dependent ones get coefficient zero).
  std::optional<Combination> solve(Vec target) const {
    Combination combo;
    reduce_in_place(target, combo);
    if (!target.empty()) return std::nullopt;
    for (auto& [tag, c] : combo) c = -c;
    return combo;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Vec v;
    Key pivot;
    Combination combo;
  };

  static void axpy(Vec& y, const Scalar& a, const Vec& x) {
    for (const auto& [k, val] : x) {
      auto it = y.find(k);
      if (it == y.end()) {
        y.emplace(k, a * val);
      } else {
        it->second += a * val;
        if (it->second.is_zero()) y.erase(it);
      }
    }
  }

  static void axpy(Combination& y, const Scalar& a, const Combination& x) {
    for (const auto& [k, val] : x) {
      Scalar& slot = y[k];
      slot += a * val;
      if (slot.is_zero()) y.erase(k);
    }
  }

  // Rows are stored so that row j vanishes on the pivots of rows i < j, so one
  // forward pass clears every pivot.
  void reduce_in_place(Vec& v, Combination& combo) const {
    for (const Row& row : rows_) {
      auto it = v.find(row.pivot);
      if (it == v.end()) continue;
      Scalar f = -(it->second / row.v.at(row.pivot));
      axpy(v, f, row.v);
      axpy(combo, f, row.combo);
    }
  }

  std::vector<Row> rows_;
};

}  // namespace chiralkit::exactlin
