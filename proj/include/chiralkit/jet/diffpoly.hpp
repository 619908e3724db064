#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiralkit/exactlin/scalar.hpp"

namespace chiralkit::jet {

using exactlin::Rational;
using exactlin::Scalar;

/// Field jets ∂_τ^a ∂_σ^b x^i, or σ-jets ∂_σ^b p_i of the momentum generators
/// used by the bracket engine.
enum class JetKind : std::uint8_t { Field, Momentum };

struct JetVar {
  JetKind kind = JetKind::Field;
  int field = 0;  // 0-based
  int tau = 0;
  int sigma = 0;

  int order() const { return tau + sigma; }
  auto operator<=>(const JetVar&) const = default;
};

inline JetVar xvar(int field, int tau = 0, int sigma = 0) { return {JetKind::Field, field, tau, sigma}; }
inline JetVar pvar(int field, int sigma = 0) { return {JetKind::Momentum, field, 0, sigma}; }

/// Coefficient functions on the cylinder with z = τ + iσ:
/// f^{(k)}(z) holomorphic, g^{(k)}(z̄) antiholomorphic, e^{imσ}.
enum class CoeffFamily : std::uint8_t { Hol, Antihol, Trig };

struct CoeffSymbol {
  CoeffFamily family = CoeffFamily::Hol;
  int order = 0;  // derivative order, Hol and Antihol only
  int mode = 0;   // Trig only

  auto operator<=>(const CoeffSymbol&) const = default;
};

inline CoeffSymbol hol(int k = 0) { return {CoeffFamily::Hol, k, 0}; }
inline CoeffSymbol antihol(int k = 0) { return {CoeffFamily::Antihol, k, 0}; }
inline CoeffSymbol trig(int m) { return {CoeffFamily::Trig, 0, m}; }

/// Product of coefficient symbols and jet variables. Symbols are kept sorted
/// with repetition; trig factors are merged into at most one, and e^{i0σ} is
/// dropped. Jets are sorted with positive exponents.
struct Monomial {
  std::vector<CoeffSymbol> symbols;
  std::vector<std::pair<JetVar, int>> jets;

  static Monomial of(JetVar v, int power = 1);
  static Monomial of(CoeffSymbol s);

  bool is_one() const { return symbols.empty() && jets.empty(); }
  int degree() const;
  /// Total derivative count: jet orders plus symbol derivative orders.
  int weight() const;
  int max_jet_order() const;
  int power_of(const JetVar& v) const;
  int trig_mode() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in jets and coefficient symbols with Gaussian-rational
/// coefficients, kept in canonical form.
class DiffPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  DiffPoly() = default;
  DiffPoly(const Scalar& c);
  DiffPoly(int c) : DiffPoly(Scalar(c)) {}
  DiffPoly(const Monomial& m, const Scalar& c = Scalar(1));
  DiffPoly(JetVar v) : DiffPoly(Monomial::of(v)) {}
  DiffPoly(CoeffSymbol s) : DiffPoly(Monomial::of(s)) {}

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Scalar& s, const DiffPoly& p);
  DiffPoly operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  DiffPoly pow(unsigned e) const;

  int max_jet_order() const;
  /// Every jet variable that occurs.
  std::vector<JetVar> variables() const;
  /// Largest field index + 1 among the jets (0 for none).
  int field_count() const;

 private:
  Terms terms_;
};

enum class Direction : std::uint8_t { Tau, Sigma };

/// D_τ or D_σ as a Leibniz derivation. D_τ is undefined on momentum jets.
DiffPoly total_derivative(Direction dir, const DiffPoly& p);
DiffPoly total_derivative(Direction dir, const DiffPoly& p, int times);
/// D_τ^a D_σ^b.
DiffPoly total_derivative(const DiffPoly& p, int tau, int sigma);

/// ∂p/∂v.
DiffPoly partial(const DiffPoly& p, const JetVar& v);

/// Replaces each jet v by rule(v) when the rule returns a value.
DiffPoly substitute(const DiffPoly& p, const std::function<std::optional<DiffPoly>(const JetVar&)>& rule);

/// ∂_z x^i = ½(∂_τ − i∂_σ)x^i and ∂_z̄ x^i = ½(∂_τ + i∂_σ)x^i.
DiffPoly dz(int field);
DiffPoly dzbar(int field);

/// Jet and symbol names used by the text grammar: x1, dt.ds.x1, p2, f, fp, g, e(-3).
std::string jet_name(const JetVar& v);
std::string symbol_name(const CoeffSymbol& s);
/// Scalar in the text grammar ("1/2", "1/2*i", "(1/2-3*i)").
std::string scalar_text(const Scalar& s);

}  // namespace chiralkit::jet
