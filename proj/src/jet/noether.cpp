#include "chiralkit/jet/noether.hpp"

#include <set>

#include "chiralkit/errors.hpp"
#include "chiralkit/exactlin/echelon.hpp"
#include "chiralkit/jet/monomial_space.hpp"

namespace chiralkit::jet {

namespace {

using Basis = exactlin::EchelonBasis<Monomial>;

bool has_bare_field(const Monomial& m) {
  for (const auto& [v, e] : m.jets)
    if (v.order() == 0) return true;
  return false;
}

Basis::Vec as_vec(const DiffPoly& p) { return Basis::Vec(p.terms().begin(), p.terms().end()); }

struct Column {
  Monomial mono;
  bool sigma_part;  // contributes D_τ(mono) to a_σ, otherwise −D_σ(mono) to a_τ
};

}  // namespace

VariationalForm Primitive::form() const {
  VariationalForm w = VariationalForm::horizontal(a_tau, Horizontal::Tau);
  w += VariationalForm::horizontal(a_sigma, Horizontal::Sigma);
  return w;
}

std::optional<Primitive> horizontal_primitive(const DiffPoly& density) {
  std::map<MonomialShape, DiffPoly> groups;
  for (const auto& [m, c] : density.terms()) groups[MonomialShape::of(m)].add_term(m, c);

  Primitive result;
  for (const auto& [shape, target] : groups) {
    const int max_order = target.max_jet_order() - 1;
    if (max_order < 0) return std::nullopt;
    std::set<int> weights;
    for (const auto& [m, c] : target.terms()) {
      weights.insert(m.weight() - 1);
      if (shape.trig_mode != 0) weights.insert(m.weight());
    }
    std::vector<Monomial> preferred, fallback;
    for (int w : weights)
      for (Monomial& m : enumerate_monomials(shape, w, max_order, true))
        (has_bare_field(m) ? fallback : preferred).push_back(std::move(m));

    std::vector<Column> columns;
    for (const auto* list : {&preferred, &fallback})
      for (const Monomial& m : *list) {
        columns.push_back({m, true});
        columns.push_back({m, false});
      }

    Basis basis;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const DiffPoly mono(columns[k].mono);
      DiffPoly image = columns[k].sigma_part ? total_derivative(Direction::Tau, mono)
                                             : -total_derivative(Direction::Sigma, mono);
      basis.insert(as_vec(image), k);
    }
    auto combo = basis.solve(as_vec(target));
    if (!combo) return std::nullopt;
    for (const auto& [k, c] : *combo)
      (columns[k].sigma_part ? result.a_sigma : result.a_tau).add_term(columns[k].mono, c);
  }
  return result;
}

DiffPoly on_shell_divergence(const Lagrangian& l, const VariationalForm& integral) {
  VariationalForm d = horizontal_d(integral);
  return OnShellRules(l).reduce(d.component(Horizontal::TauSigma));
}

NoetherResult noether_detailed(const Lagrangian& l, const Generator& gen) {
  if (gen.fields() != l.fields()) throw DimensionMismatch("generator and Lagrangian have different field counts");
  const DiffPoly moved = prolong(gen, l.density());
  auto prim = horizontal_primitive(moved);
  if (!prim) throw NotASymmetry("the variation of the Lagrangian is not a total divergence");
  NoetherResult r;
  r.alpha = prim->form();
  r.integral = r.alpha - interior(gen, variational_one_form(l));
  if (!on_shell_divergence(l, r.integral).is_zero())
    throw MathError("internal: Noether integral is not conserved on shell");
  return r;
}

VariationalForm noether(const Lagrangian& l, const Generator& gen) { return noether_detailed(l, gen).integral; }

Generator time_translation(std::size_t n) {
  Generator g;
  for (std::size_t i = 0; i < n; ++i) g.components.emplace_back(xvar(static_cast<int>(i), 1, 0));
  return g;
}

Generator space_translation(std::size_t n) {
  Generator g;
  for (std::size_t i = 0; i < n; ++i) g.components.emplace_back(xvar(static_cast<int>(i), 0, 1));
  return g;
}

Generator target_shift(std::size_t n, std::size_t field) {
  if (field >= n) throw DimensionMismatch("field index out of range");
  Generator g;
  g.components.resize(n);
  g.components[field] = DiffPoly(1);
  return g;
}

Generator holomorphic_field(std::size_t n) {
  Generator g;
  for (std::size_t i = 0; i < n; ++i) g.components.push_back(DiffPoly(hol()) * dz(static_cast<int>(i)));
  return g;
}

Generator antiholomorphic_field(std::size_t n) {
  Generator g;
  for (std::size_t i = 0; i < n; ++i) g.components.push_back(DiffPoly(antihol()) * dzbar(static_cast<int>(i)));
  return g;
}

}  // namespace chiralkit::jet
