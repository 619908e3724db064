#include "chiralkit/fock/qseries.hpp"

#include <algorithm>

#include "chiralkit/errors.hpp"

namespace chiralkit::fock {

Scalar QSeries::coefficient(const Rational& e, const Rational& ebar) const {
  auto it = terms_.find({e, ebar});
  return it == terms_.end() ? Scalar() : it->second;
}

void QSeries::add(const Rational& e, const Rational& ebar, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace({e, ebar}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QSeries QSeries::barred() const {
  QSeries out(order_);
  for (const auto& [e, c] : terms_) out.add(e.second, e.first, c);
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (terms_.empty())
    order_ = o.order_;
  else if (!o.terms_.empty())
    order_ = std::min(order_, o.order_);
  for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
  return *this;
}

QSeries operator-(QSeries a, const QSeries& b) {
  QSeries neg(b.order_);
  for (const auto& [e, c] : b.terms_) neg.add(e.first, e.second, -c);
  return a += neg;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.order_, b.order_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::vector<Rational> colored_partition_counts(std::size_t colors, int order) {
  if (order < 0) throw MathError("series order must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k)
    for (std::size_t rep = 0; rep < colors; ++rep)
      for (int e = k; e <= order; ++e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - k)];
  return c;
}

QSeries character(std::size_t colors, const Rational& h, int order) {
  QSeries out(order);
  const auto counts = colored_partition_counts(colors, order);
  for (int k = 0; k <= order; ++k) out.add(h + k, 0, Scalar(counts[static_cast<std::size_t>(k)]));
  return out;
}

QSeries character(const LatticeModel& m, const Sector& s, int order) { return character(m.dim(), s.h, order); }

QSeries partition_function(const LatticeModel& m, const std::vector<Sector>& sectors, int order) {
  QSeries z(order);
  for (const Sector& s : sectors) z += character(m.dim(), s.h, order) * character(m.dim(), s.hbar, order).barred();
  return z;
}

QSeries partition_function(const LatticeModel& m, int cutoff, int order) {
  return partition_function(m, enumerate_sectors(m, cutoff), order);
}

Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json t;
    t["q"] = exactlin::to_json(Scalar(e.first));
    t["qbar"] = exactlin::to_json(Scalar(e.second));
    t["coeff"] = exactlin::to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["order"] = s.order();
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace chiralkit::fock
