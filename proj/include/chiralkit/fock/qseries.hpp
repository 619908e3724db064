#pragma once

#include <map>
#include <utility>

#include "chiralkit/fock/lattice.hpp"

namespace chiralkit::fock {

struct ExponentLess {
  bool operator()(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

/// Σ c q^e q̄^ē over rational exponents, truncated `order` levels above the
/// leading exponent of each summand in each variable.
class QSeries {
 public:
  using Exponent = std::pair<Rational, Rational>;
  using Terms = std::map<Exponent, Scalar, ExponentLess>;

  QSeries() = default;
  explicit QSeries(int order) : order_(order) {}

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Rational& e, const Rational& ebar = 0) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Rational& e, const Rational& ebar, const Scalar& c);

  /// q ↦ q̄.
  QSeries barred() const;

  QSeries& operator+=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b);
  /// Product of independent truncations; the order is the smaller one.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.terms_ == b.terms_; }

 private:
  int order_ = 0;
  Terms terms_;
};

/// Number of n-colored partitions of 0..order.
std::vector<Rational> colored_partition_counts(std::size_t colors, int order);

/// q^h Σ_{k≤order} p_n(k) q^k for a weight with L₀-eigenvalue h.
QSeries character(std::size_t colors, const Rational& h, int order);
QSeries character(const LatticeModel& m, const Sector& s, int order);

/// Σ over sectors of χ_h(q) χ_h̄(q̄).
QSeries partition_function(const LatticeModel& m, const std::vector<Sector>& sectors, int order);
QSeries partition_function(const LatticeModel& m, int cutoff, int order);

Json to_json(const QSeries& s);

}  // namespace chiralkit::fock
