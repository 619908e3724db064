#include "chiralkit/coisson/fourier.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "chiralkit/exactlin/echelon.hpp"
#include "chiralkit/jet/monomial_space.hpp"

namespace chiralkit::coisson {

using jet::Monomial;
using jet::MonomialShape;

namespace {

std::vector<int> derivative_profile(const Monomial& m) {
  std::vector<int> orders;
  for (const auto& [v, e] : m.jets)
    for (int k = 0; k < e; ++k) orders.push_back(v.order());
  for (const auto& s : m.symbols) orders.push_back(s.order);
  std::sort(orders.rbegin(), orders.rend());
  return orders;
}

// Pivot order: weight, then how concentrated the derivatives are.
struct IntegrationOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    auto pa = derivative_profile(a), pb = derivative_profile(b);
    if (pa != pb) return pa < pb;
    return a < b;
  }
};

using Basis = exactlin::EchelonBasis<Monomial, IntegrationOrder>;

DiffPoly reduce_group(const MonomialShape& shape, const DiffPoly& group) {
  const bool bare = shape.jet_slots.empty() && shape.symbol_slots.empty();
  if (bare) return shape.trig_mode != 0 ? DiffPoly() : group;

  // With a trig factor D_σ does not preserve weight, so reduce in the space
  // of weights up to the top one; otherwise weights separate.
  std::set<int> weights;
  for (const auto& [m, c] : group.terms()) weights.insert(m.weight());
  std::vector<std::pair<std::vector<int>, DiffPoly>> blocks;
  if (shape.trig_mode != 0) {
    std::vector<int> below;
    for (int w = 0; w < *weights.rbegin(); ++w) below.push_back(w);
    blocks.emplace_back(below, group);
  } else {
    for (int w : weights) {
      DiffPoly part;
      for (const auto& [m, c] : group.terms())
        if (m.weight() == w) part.add_term(m, c);
      blocks.emplace_back(std::vector<int>{w - 1}, part);
    }
  }

  DiffPoly out;
  for (const auto& [sources, part] : blocks) {
    Basis basis;
    std::size_t tag = 0;
    for (int w : sources)
      for (const Monomial& m : jet::enumerate_monomials(shape, w, -1, false)) {
        const DiffPoly image = jet::total_derivative(jet::Direction::Sigma, DiffPoly(m));
        basis.insert(Basis::Vec(image.terms().begin(), image.terms().end()), tag++);
      }
    for (const auto& [m, c] : basis.reduce(Basis::Vec(part.terms().begin(), part.terms().end()))) out.add_term(m, c);
  }
  return out;
}

}  // namespace

DiffPoly normal_form(const DiffPoly& density) {
  std::map<MonomialShape, DiffPoly> groups;
  for (const auto& [m, c] : density.terms()) groups[MonomialShape::of(m)].add_term(m, c);
  DiffPoly out;
  for (const auto& [shape, group] : groups) out += reduce_group(shape, group);
  return out;
}

FourierClass::FourierClass(const LocalDensity& representative) : nf_(coisson::normal_form(representative.poly())) {}

FourierClass& FourierClass::operator+=(const FourierClass& o) {
  nf_ = coisson::normal_form(nf_ + o.nf_);
  return *this;
}

FourierClass operator*(const Scalar& s, const FourierClass& a) {
  FourierClass r;
  r.nf_ = s * a.nf_;
  return r;
}

FourierClass fourier_bracket(const FourierClass& a, const FourierClass& b, const BracketTable& t) {
  return FourierClass(LocalDensity(density_bracket(a.density(), b.density(), t).coefficient(0)));
}

FourierClass jacobi_residual(const BracketTable& t, const LocalDensity& a, const LocalDensity& b, const LocalDensity& c) {
  const FourierClass A(a), B(b), C(c);
  auto br = [&](const FourierClass& x, const FourierClass& y) { return fourier_bracket(x, y, t); };
  return br(A, br(B, C)) + br(B, br(C, A)) + br(C, br(A, B));
}

}  // namespace chiralkit::coisson
