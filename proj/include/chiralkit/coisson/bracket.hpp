#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "chiralkit/exactlin/matrix.hpp"
#include "chiralkit/jet/diffpoly.hpp"
#include "chiralkit/jet/expr.hpp"

namespace chiralkit::coisson {

using exactlin::Json;
using exactlin::Matrix;
using exactlin::Rational;
using exactlin::Scalar;
using jet::DiffPoly;
using jet::JetVar;

/// A density f(σ)dσ on the circle: a polynomial in σ-jets of x^i and p_i with
/// coefficient symbols. Throws MathError if a field jet carries ∂_τ.
class LocalDensity {
 public:
  LocalDensity() = default;
  LocalDensity(DiffPoly p);

  const DiffPoly& poly() const { return p_; }
  friend bool operator==(const LocalDensity&, const LocalDensity&) = default;

 private:
  DiffPoly p_;
};

/// Σ_k c_k(σ′) ∂_σ^k δ(σ−σ′).
class DeltaExpansion {
 public:
  const std::map<int, DiffPoly>& coefficients() const { return c_; }
  DiffPoly coefficient(int k) const;
  void add(int k, const DiffPoly& c);
  bool is_zero() const { return c_.empty(); }

  DeltaExpansion& operator+=(const DeltaExpansion& o);
  friend bool operator==(const DeltaExpansion&, const DeltaExpansion&) = default;

 private:
  std::map<int, DiffPoly> c_;
};

std::string to_text(const DeltaExpansion& e);
Json to_json(const DeltaExpansion& e);
DeltaExpansion delta_from_json(const Json& j);

/// Brackets of the generators: {p_i(σ), x^j(σ′)} = s δ_i^j δ(σ−σ′),
/// {x, x} = 0 and {p_i(σ), p_j(σ′)} = h_ijk(x(σ′)) ∂_σx^k(σ′) δ(σ−σ′).
/// The default s = −1 makes p = i g(∂_τx) + B(∂_σx) satisfy
/// {∂_τx^i(σ), x^j(σ′)} = i g^{ij} δ(σ−σ′).
class BracketTable {
 public:
  explicit BracketTable(std::size_t fields, Scalar sign = Scalar(-1));

  std::size_t fields() const { return n_; }
  const Scalar& sign() const { return sign_; }

  /// Sets h_ijk (0-based) and its antisymmetric images. The coefficient must
  /// be a polynomial in the undifferentiated fields.
  void set_twist(std::size_t i, std::size_t j, std::size_t k, const DiffPoly& coeff);
  DiffPoly twist(std::size_t i, std::size_t j, std::size_t k) const;
  bool twisted() const { return !twist_.empty(); }

  /// Bracket of two undifferentiated generators (x^i or p_i).
  DeltaExpansion generator_bracket(const JetVar& a, const JetVar& b) const;

 private:
  std::size_t n_;
  Scalar sign_;
  std::map<std::size_t, DiffPoly> twist_;  // keyed by i < j < k
};

/// {a(σ)dσ, b(σ′)dσ′} by Leibniz in both slots and ∂_σ/∂_σ′ compatibility,
/// with every coefficient transported to σ′.
DeltaExpansion density_bracket(const LocalDensity& a, const LocalDensity& b, const BracketTable& t);

/// {∫a dσ, b(σ′)}: the δ-coefficient of density_bracket.
DiffPoly hamiltonian_flow(const LocalDensity& h, const LocalDensity& a, const BracketTable& t);

/// Dictionary between field jets (x, ∂_τx and their σ-derivatives) and the
/// canonical generators, via p_j = i g_ij ∂_τx^i + b_ij ∂_σx^i.
class Identification {
 public:
  Identification(Matrix g, Matrix b);
  static Identification standard(std::size_t n);

  std::size_t fields() const { return g_.rows(); }
  const Matrix& metric() const { return g_; }
  const Matrix& bfield() const { return b_; }

  /// Replaces ∂_τ∂_σ^k x by the momentum expression; higher τ-derivatives
  /// are first reduced with ∂_τ²x = −∂_σ²x.
  LocalDensity to_canonical(const DiffPoly& p) const;
  DiffPoly from_canonical(const LocalDensity& d) const;

 private:
  Matrix g_;
  Matrix ginv_;
  Matrix b_;
};

}  // namespace chiralkit::coisson
