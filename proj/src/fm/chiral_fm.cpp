#include "chiralkit/fm/chiral_fm.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::fm {

using exactlin::alt_pullback_by_inverse;

CdoIsoClass::CdoIsoClass(AltTensor l, AltTensor n) : lambda(std::move(l)), nu(std::move(n)) {
  const std::size_t d = lambda.dim();
  if (lambda.degree() != 3 || lambda.value_dim() != 1) throw DimensionMismatch("lambda must be a scalar 3-form");
  if (nu.degree() != 2 || nu.dim() != d || nu.value_dim() != d)
    throw DimensionMismatch("nu must be a 2-form with values of the same dimension");
}

CdoIsoClass CdoIsoClass::zero(std::size_t n) { return CdoIsoClass(AltTensor(3, n), AltTensor(2, n, n)); }

TdoIsoClass::TdoIsoClass(Matrix c_, AltTensor o) : c(std::move(c_)), omega(std::move(o)) {
  if (!c.is_square() || omega.degree() != 2 || omega.dim() != c.rows() || omega.value_dim() != 1)
    throw DimensionMismatch("tdo class needs an n×n matrix and a scalar 2-form on the same space");
}

TdoIsoClass TdoIsoClass::zero(std::size_t n) { return TdoIsoClass(Matrix(n, n), AltTensor(2, n)); }

NondegClass::NondegClass(Matrix mu) : mu_(std::move(mu)) {
  if (!mu_.is_square()) throw DimensionMismatch("class must be a square matrix");
  inv_ = mu_.inverse();
}

std::vector<Scalar> vertex_algebroid_pairing(const AltTensor& lambda, std::size_t x, std::size_t y) {
  if (lambda.degree() != 3 || lambda.value_dim() != 1) throw DimensionMismatch("lambda must be a scalar 3-form");
  const std::size_t n = lambda.dim();
  if (x >= n || y >= n) throw DimensionMismatch("basis index out of range");
  std::vector<Scalar> out(n);
  for (std::size_t z = 0; z < n; ++z) out[z] = lambda.at({x, y, z});
  return out;
}

Matrix fm_linear(const Matrix& a) { return -a.inverse(); }

std::pair<Matrix, Matrix> fm_linear_differential(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows() || b.cols() != a.cols()) throw DimensionMismatch("tangent vector has the wrong shape");
  Matrix inv = a.inverse();
  return {-inv, inv * b * inv};
}

CdoIsoClass fm_cdo(const NondegClass& mu, const CdoIsoClass& x) {
  if (mu.dim() != x.dim()) throw DimensionMismatch("class and cdo dimensions differ");
  const Matrix& inv = mu.inverse();
  AltTensor lambda = alt_pullback_by_inverse(3, inv, x.lambda);
  AltTensor nu = alt_pullback_by_inverse(2, inv, x.nu).map_values(inv);
  return CdoIsoClass(std::move(lambda), std::move(nu));
}

CdoMorphism fm_cdo_morphism(const NondegClass& mu, const CdoMorphism& m) {
  if (m.h.degree() != 2 || mu.dim() != m.h.dim()) throw DimensionMismatch("class and morphism dimensions differ");
  return {alt_pullback_by_inverse(2, mu.inverse(), m.h)};
}

TdoIsoClass fm_tdo(const NondegClass& mu, const TdoIsoClass& x) {
  if (mu.dim() != x.c.rows()) throw DimensionMismatch("class and tdo dimensions differ");
  const Matrix& inv = mu.inverse();
  return TdoIsoClass(inv * x.c * inv, alt_pullback_by_inverse(2, inv, x.omega));
}

Json to_json(const CdoIsoClass& x) {
  Json j;
  j["kind"] = "cdo";
  j["n"] = x.dim();
  j["lambda"] = exactlin::to_json(x.lambda);
  j["nu"] = exactlin::to_json(x.nu);
  return j;
}

CdoIsoClass cdo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw ParseError("cdo class needs field 'n'");
  const std::size_t n = j.at("n").get<std::size_t>();
  AltTensor lambda = j.contains("lambda") ? exactlin::tensor_from_json(j.at("lambda")) : AltTensor(3, n);
  AltTensor nu = j.contains("nu") ? exactlin::tensor_from_json(j.at("nu")) : AltTensor(2, n, n);
  if (lambda.dim() != n || nu.dim() != n) throw ParseError("cdo tensors do not match 'n'");
  try {
    return CdoIsoClass(std::move(lambda), std::move(nu));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const CdoMorphism& m) {
  Json j;
  j["kind"] = "cdo_morphism";
  j["h"] = exactlin::to_json(m.h);
  return j;
}

CdoMorphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("h")) throw ParseError("morphism needs field 'h'");
  AltTensor h = exactlin::tensor_from_json(j.at("h"));
  if (h.degree() != 2 || h.value_dim() != 1) throw ParseError("morphism must be a scalar 2-form");
  return {std::move(h)};
}

Json to_json(const TdoIsoClass& x) {
  Json j;
  j["kind"] = "tdo";
  j["c"] = exactlin::to_json(x.c);
  j["omega"] = exactlin::to_json(x.omega);
  return j;
}

TdoIsoClass tdo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c")) throw ParseError("tdo class needs field 'c'");
  Matrix c = exactlin::matrix_from_json(j.at("c"));
  AltTensor omega = j.contains("omega") ? exactlin::tensor_from_json(j.at("omega")) : AltTensor(2, c.rows());
  try {
    return TdoIsoClass(std::move(c), std::move(omega));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

}  // namespace chiralkit::fm
