#include "chiralkit/jet/monomial_space.hpp"

#include <algorithm>
#include <set>

namespace chiralkit::jet {

MonomialShape MonomialShape::of(const Monomial& m) {
  MonomialShape s;
  for (const auto& [v, e] : m.jets)
    for (int k = 0; k < e; ++k) s.jet_slots.emplace_back(v.kind, v.field);
  for (const auto& c : m.symbols) {
    if (c.family == CoeffFamily::Trig)
      s.trig_mode = c.mode;
    else
      s.symbol_slots.push_back(c.family);
  }
  std::sort(s.jet_slots.begin(), s.jet_slots.end());
  std::sort(s.symbol_slots.begin(), s.symbol_slots.end());
  return s;
}

namespace {

struct Enumerator {
  const MonomialShape& shape;
  int max_order;
  bool allow_tau;
  std::set<Monomial> out;
  std::vector<JetVar> jets;
  std::vector<CoeffSymbol> syms;

  void run(std::size_t slot, int budget) {
    const std::size_t nj = shape.jet_slots.size();
    const std::size_t ns = shape.symbol_slots.size();
    if (slot == nj + ns) {
      if (budget != 0) return;
      Monomial m;
      if (shape.trig_mode != 0) m = Monomial::of(trig(shape.trig_mode));
      for (const auto& s : syms) m = m * Monomial::of(s);
      for (const auto& v : jets) m = m * Monomial::of(v);
      out.insert(std::move(m));
      return;
    }
    if (slot < nj) {
      const auto [kind, field] = shape.jet_slots[slot];
      const int top = max_order < 0 ? budget : std::min(budget, max_order);
      for (int o = 0; o <= top; ++o) {
        const int tau_max = (allow_tau && kind == JetKind::Field) ? o : 0;
        for (int a = 0; a <= tau_max; ++a) {
          jets.push_back(JetVar{kind, field, a, o - a});
          run(slot + 1, budget - o);
          jets.pop_back();
        }
      }
      return;
    }
    const CoeffFamily fam = shape.symbol_slots[slot - nj];
    for (int o = 0; o <= budget; ++o) {
      syms.push_back(CoeffSymbol{fam, o, 0});
      run(slot + 1, budget - o);
      syms.pop_back();
    }
  }
};

}  // namespace

std::vector<Monomial> enumerate_monomials(const MonomialShape& shape, int weight, int max_jet_order, bool allow_tau) {
  if (weight < 0) return {};
  Enumerator e{shape, max_jet_order, allow_tau, {}, {}, {}};
  e.run(0, weight);
  return {e.out.begin(), e.out.end()};
}

}  // namespace chiralkit::jet
