#pragma once

#include <utility>
#include <vector>

#include "chiralkit/jet/diffpoly.hpp"

namespace chiralkit::jet {

/// The data a monomial keeps under total derivatives: which fields carry
/// jets, which coefficient families occur, and the trig mode. Total
/// derivatives map monomials of one shape to combinations of the same shape.
struct MonomialShape {
  std::vector<std::pair<JetKind, int>> jet_slots;  // sorted, with repetition
  std::vector<CoeffFamily> symbol_slots;           // sorted, Hol/Antihol only
  int trig_mode = 0;

  static MonomialShape of(const Monomial& m);
  auto operator<=>(const MonomialShape&) const = default;
};

/// Every monomial of the shape with the given weight whose jets have order at
/// most max_jet_order (negative means unbounded). Without allow_tau all jets
/// are σ-jets.
std::vector<Monomial> enumerate_monomials(const MonomialShape& shape, int weight, int max_jet_order, bool allow_tau);

}  // namespace chiralkit::jet
