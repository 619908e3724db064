#pragma once

#include <optional>

#include "chiralkit/jet/forms.hpp"
#include "chiralkit/jet/lagrangian.hpp"

namespace chiralkit::jet {

/// α = a_tau dτ + a_sigma dσ with dα = (D_τ a_sigma − D_σ a_tau) dτ∧dσ.
struct Primitive {
  DiffPoly a_tau;
  DiffPoly a_sigma;

  VariationalForm form() const;
};

/// Solves D_τ a_σ − D_σ a_τ = density over an ansatz of monomials one jet
/// order lower, with the same fields and coefficient families. Ansatz terms
/// with an undifferentiated field come last and are used only when needed,
/// which makes the primitive unique. Returns nullopt if no solution.
std::optional<Primitive> horizontal_primitive(const DiffPoly& density);

struct NoetherResult {
  VariationalForm alpha;     // x̂ℒ = dα
  VariationalForm integral;  // α − ι_x̂ γ
};

/// Noether integral of motion of x̂. Throws NotASymmetry when x̂ℒ is not
/// horizontally exact, and MathError if the on-shell check of d(integral) fails.
NoetherResult noether_detailed(const Lagrangian& l, const Generator& gen);
VariationalForm noether(const Lagrangian& l, const Generator& gen);

/// d(integral) reduced by the Euler–Lagrange rewrite rules.
DiffPoly on_shell_divergence(const Lagrangian& l, const VariationalForm& integral);

Generator time_translation(std::size_t n);   // ∂_τ
Generator space_translation(std::size_t n);  // ∂_σ
Generator target_shift(std::size_t n, std::size_t field);  // δ/δx^field
Generator holomorphic_field(std::size_t n);      // f(z)∂_z
Generator antiholomorphic_field(std::size_t n);  // g(z̄)∂_z̄

}  // namespace chiralkit::jet
