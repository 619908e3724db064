#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chiralkit/jet/diffpoly.hpp"
#include "chiralkit/jet/expr.hpp"

namespace chiralkit::jet {

/// Horizontal part of a form: 1, dτ, dσ or dτ∧dσ.
enum class Horizontal : std::uint8_t { One, Tau, Sigma, TauSigma };

int horizontal_degree(Horizontal h);

/// A component is coeff · δv_1 ∧ … ∧ δv_k ∧ h with v_1 < … < v_k.
struct FormKey {
  std::vector<JetVar> vertical;
  Horizontal horizontal = Horizontal::One;

  auto operator<=>(const FormKey&) const = default;
};

/// Evolutionary vector field given by its characteristic: x̂(x^i) = F_i.
struct Generator {
  std::vector<DiffPoly> components;

  std::size_t fields() const { return components.size(); }
};

/// Element of the variational bicomplex in canonical form.
class VariationalForm {
 public:
  VariationalForm() = default;
  static VariationalForm horizontal(const DiffPoly& coeff, Horizontal h);

  /// Adds coeff · δ(vertical…) ∧ h; the factors are sorted with the
  /// alternating sign and repeated factors give zero.
  void add(std::vector<JetVar> vertical, Horizontal h, const DiffPoly& coeff);

  const std::map<FormKey, DiffPoly>& components() const { return comps_; }
  DiffPoly component(const FormKey& key) const;
  /// Coefficient of a purely horizontal basis element.
  DiffPoly component(Horizontal h) const { return component(FormKey{{}, h}); }
  bool is_zero() const { return comps_.empty(); }

  VariationalForm& operator+=(const VariationalForm& o);
  VariationalForm& operator-=(const VariationalForm& o);
  friend VariationalForm operator+(VariationalForm a, const VariationalForm& b) { return a += b; }
  friend VariationalForm operator-(VariationalForm a, const VariationalForm& b) { return a -= b; }
  friend VariationalForm operator*(const Scalar& s, const VariationalForm& f);
  friend bool operator==(const VariationalForm&, const VariationalForm&) = default;

 private:
  std::map<FormKey, DiffPoly> comps_;
};

/// d = dτ∧D_τ + dσ∧D_σ acting from the left.
VariationalForm horizontal_d(const VariationalForm& w);
/// δ, acting on coefficients from the left.
VariationalForm vertical_d(const VariationalForm& w);
/// Contraction ι_x̂ with δ(∂^J x^i) ↦ D^J F_i.
VariationalForm interior(const Generator& gen, const VariationalForm& w);
/// x̂ as a derivation on jets: ∂_τ^a∂_σ^b x^i ↦ D_τ^a D_σ^b F_i.
DiffPoly prolong(const Generator& gen, const DiffPoly& p);
/// Lie derivative along x̂: coefficients by prolong, δv ↦ δ(x̂ v).
VariationalForm prolong(const Generator& gen, const VariationalForm& w);

std::string to_text(const VariationalForm& w);
Json to_json(const VariationalForm& w);
VariationalForm form_from_json(const Json& j);

}  // namespace chiralkit::jet
