#pragma once

#include <cstddef>
#include <utility>

#include "chiralkit/exactlin/alt_tensor.hpp"
#include "chiralkit/exactlin/json_io.hpp"
#include "chiralkit/exactlin/matrix.hpp"

namespace chiralkit::fm {

using exactlin::AltTensor;
using exactlin::Json;
using exactlin::Matrix;
using exactlin::Scalar;

/// Isomorphism class of a CDO on a torus with Lie algebra of rank n:
/// a 3-form lambda on g and a map nu: Λ²g → ĝ (a 2-form with values in C^n).
struct CdoIsoClass {
  CdoIsoClass() = default;
  CdoIsoClass(AltTensor lambda, AltTensor nu);
  static CdoIsoClass zero(std::size_t n);

  std::size_t dim() const { return lambda.dim(); }

  AltTensor lambda;
  AltTensor nu;

  friend bool operator==(const CdoIsoClass&, const CdoIsoClass&) = default;
};

/// Automorphism data: a 2-form on g. Composition is addition.
struct CdoMorphism {
  AltTensor h;

  friend CdoMorphism operator+(const CdoMorphism& a, const CdoMorphism& b) { return {a.h + b.h}; }
  friend bool operator==(const CdoMorphism&, const CdoMorphism&) = default;
};

struct TdoIsoClass {
  TdoIsoClass() = default;
  TdoIsoClass(Matrix c, AltTensor omega);
  static TdoIsoClass zero(std::size_t n);

  Matrix c;
  AltTensor omega;

  friend bool operator==(const TdoIsoClass&, const TdoIsoClass&) = default;
};

/// An invertible map g → ĝ. Throws SingularMatrix on construction otherwise.
class NondegClass {
 public:
  explicit NondegClass(Matrix mu);

  const Matrix& mu() const { return mu_; }
  const Matrix& inverse() const { return inv_; }
  std::size_t dim() const { return mu_.rows(); }
  /// The inverse viewed as a class ĝ → g.
  NondegClass inverted() const { return NondegClass(inv_, mu_); }

 private:
  NondegClass(Matrix mu, Matrix inv) : mu_(std::move(mu)), inv_(std::move(inv)) {}

  Matrix mu_;
  Matrix inv_;
};

/// The covector z ↦ lambda(x, y, z); x and y are 0-based.
std::vector<Scalar> vertex_algebroid_pairing(const AltTensor& lambda, std::size_t x, std::size_t y);

/// A ↦ −A⁻¹.
Matrix fm_linear(const Matrix& a);
/// (A, B) ↦ (−A⁻¹, A⁻¹ B A⁻¹).
std::pair<Matrix, Matrix> fm_linear_differential(const Matrix& a, const Matrix& b);

CdoIsoClass fm_cdo(const NondegClass& mu, const CdoIsoClass& x);
CdoMorphism fm_cdo_morphism(const NondegClass& mu, const CdoMorphism& m);
TdoIsoClass fm_tdo(const NondegClass& mu, const TdoIsoClass& x);

Json to_json(const CdoIsoClass& x);
CdoIsoClass cdo_from_json(const Json& j);
Json to_json(const CdoMorphism& m);
CdoMorphism morphism_from_json(const Json& j);
Json to_json(const TdoIsoClass& x);
TdoIsoClass tdo_from_json(const Json& j);

}  // namespace chiralkit::fm
