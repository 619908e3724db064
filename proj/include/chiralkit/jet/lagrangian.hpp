#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "chiralkit/exactlin/matrix.hpp"
#include "chiralkit/jet/forms.hpp"

namespace chiralkit::jet {

using exactlin::Matrix;

/// First-order density ℓ of the Lagrangian ℓ dτ∧dσ in n fields.
class Lagrangian {
 public:
  /// Throws NotFirstOrder if some jet has order above one or is a momentum jet.
  Lagrangian(DiffPoly density, std::size_t fields);

  const DiffPoly& density() const { return density_; }
  std::size_t fields() const { return fields_; }
  VariationalForm form() const { return VariationalForm::horizontal(density_, Horizontal::TauSigma); }

 private:
  DiffPoly density_;
  std::size_t fields_;
};

/// (i/2)((∂_τx)² + (∂_σx)²).
Lagrangian free_boson_lagrangian();
/// (i/2) g_ij (∂_τx^i ∂_τx^j + ∂_σx^i ∂_σx^j) + b_ij ∂_τx^i ∂_σx^j,
/// i.e. −(i/2)·(2 g(∂_zx,∂_z̄x) + 2 B(∂_zx,∂_z̄x)) dz∧dz̄ written in τ, σ.
Lagrangian sigma_model_lagrangian(const Matrix& g, const Matrix& b);

std::vector<DiffPoly> euler_lagrange(const Lagrangian& l);
/// γ = Σ ∂ℓ/∂(∂_τx^i) δx^i∧dσ − ∂ℓ/∂(∂_σx^i) δx^i∧dτ.
VariationalForm variational_one_form(const Lagrangian& l);

/// Rewrite rules ∂_τ²x^j → ρ_j obtained by solving the Euler–Lagrange
/// equations for the second τ-derivatives. Requires E_i = K_ij ∂_τ²x^j + R_i
/// with K constant and invertible and R free of ∂_τ² jets; throws NonLinearEL.
class OnShellRules {
 public:
  explicit OnShellRules(const Lagrangian& l);

  const std::vector<DiffPoly>& second_time_derivatives() const { return rho_; }
  /// True when every rule is ∂_τ²x^j → −∂_σ²x^j.
  bool is_free_wave() const;
  /// Rewrites until every field jet has τ-order at most one.
  DiffPoly reduce(const DiffPoly& p) const;

 private:
  const DiffPoly& reduced_jet(const JetVar& v) const;

  std::vector<DiffPoly> rho_;
  mutable std::map<JetVar, DiffPoly> memo_;
};

/// Drops dτ components and rewrites with ∂_τ²x → −∂_σ²x.
/// Throws NonLinearEL unless the model's equations have exactly that form.
DiffPoly restrict_to_sol0(const DiffPoly& p, const Lagrangian& l);
VariationalForm restrict_to_sol0(const VariationalForm& w, const Lagrangian& l);

/// Free-wave rewriting without reference to a Lagrangian.
DiffPoly reduce_free_wave(const DiffPoly& p);

}  // namespace chiralkit::jet
