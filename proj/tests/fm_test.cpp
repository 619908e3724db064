#include <doctest.h>

#include "chiralkit/errors.hpp"
#include "chiralkit/fm/chiral_fm.hpp"
#include "support.hpp"

using namespace chiralkit;
using namespace chiralkit::fm;

namespace {

CdoIsoClass random_cdo(testing_support::Random& rnd, std::size_t n) {
  return CdoIsoClass(rnd.alt(3, n), rnd.alt(2, n, n));
}

Matrix block(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  Matrix m(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = a(r, c);
      m(r + n, c + n) = a(r, c);
      m(r, c + n) = b(r, c);
    }
  return m;
}

}  // namespace

TEST_SUITE("fm") {
  TEST_CASE("identity class acts trivially") {
    testing_support::Random rnd(1);
    const NondegClass id(Matrix::identity(3));
    const CdoIsoClass x = random_cdo(rnd, 3);
    CHECK(fm_cdo(id, x) == x);
    const TdoIsoClass t(rnd.matrix(3), rnd.alt(2, 3));
    CHECK(fm_tdo(id, t) == t);
  }

  TEST_CASE("transform by mu then mu inverse is the identity") {
    testing_support::Random rnd(2);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(2, 4));
      const NondegClass mu(rnd.invertible(n));
      const CdoIsoClass x = random_cdo(rnd, n);
      CHECK(fm_cdo(mu.inverted(), fm_cdo(mu, x)) == x);
      const CdoMorphism h{rnd.alt(2, n)};
      CHECK(fm_cdo_morphism(mu.inverted(), fm_cdo_morphism(mu, h)) == h);
      const TdoIsoClass t(rnd.matrix(n), rnd.alt(2, n));
      CHECK(fm_tdo(mu.inverted(), fm_tdo(mu, t)) == t);
    }
  }

  TEST_CASE("morphisms transform additively") {
    testing_support::Random rnd(4);
    const NondegClass mu(rnd.invertible(3));
    const CdoMorphism a{rnd.alt(2, 3)}, b{rnd.alt(2, 3)};
    CHECK(fm_cdo_morphism(mu, a + b) == fm_cdo_morphism(mu, a) + fm_cdo_morphism(mu, b));
  }

  TEST_CASE("scaling the class") {
    testing_support::Random rnd(5);
    const Matrix m = rnd.invertible(3);
    const Scalar t(exactlin::Rational(3, 2), 1);
    const Scalar t3 = t * t * t;
    const CdoIsoClass x = random_cdo(rnd, 3);
    const CdoIsoClass base = fm_cdo(NondegClass(m), x), scaled = fm_cdo(NondegClass(t * m), x);
    CHECK(t3 * scaled.lambda == base.lambda);
    CHECK(t3 * scaled.nu == base.nu);
    const CdoMorphism h{rnd.alt(2, 3)};
    CHECK(t * t * fm_cdo_morphism(NondegClass(t * m), h).h == fm_cdo_morphism(NondegClass(m), h).h);
  }

  TEST_CASE("linear avatar") {
    testing_support::Random rnd(6);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = rnd.invertible(static_cast<std::size_t>(rnd.integer(1, 4)));
      CHECK(fm_linear(fm_linear(a)) == a);
      CHECK(fm_linear(a) * a == -Matrix::identity(a.rows()));
    }
  }

  TEST_CASE("differential matches the block-matrix oracle") {
    testing_support::Random rnd(7);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
      const Matrix a = rnd.invertible(n), b = rnd.matrix(n);
      const auto [value, tangent] = fm_linear_differential(a, b);
      const Matrix big = fm_linear(block(a, b));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          CHECK(value(r, c) == big(r, c));
          CHECK(tangent(r, c) == big(r, c + n));
        }
    }
  }

  TEST_CASE("tdo transform on (mu, 0)") {
    testing_support::Random rnd(8);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix m = rnd.invertible(3);
      const TdoIsoClass out = fm_tdo(NondegClass(m), TdoIsoClass(m, AltTensor(2, 3)));
      CHECK(out.c == m.inverse());
      CHECK(out.omega.is_zero());
    }
  }

  TEST_CASE("vertex algebroid pairing") {
    AltTensor lambda(3, 3);
    lambda.set({0, 1, 2}, Scalar(2));
    CHECK(vertex_algebroid_pairing(lambda, 0, 1) == std::vector<Scalar>{0, 0, 2});
    CHECK(vertex_algebroid_pairing(lambda, 1, 0) == std::vector<Scalar>{0, 0, -2});
    CHECK(vertex_algebroid_pairing(lambda, 1, 1) == std::vector<Scalar>{0, 0, 0});
  }

  TEST_CASE("errors and json") {
    CHECK_THROWS_AS(NondegClass(Matrix{{1, 1}, {1, 1}}), SingularMatrix);
    CHECK_THROWS_AS(CdoIsoClass(AltTensor(2, 3), AltTensor(2, 3, 3)), DimensionMismatch);
    CHECK_THROWS_AS(fm_cdo(NondegClass(Matrix::identity(2)), CdoIsoClass::zero(3)), DimensionMismatch);
    testing_support::Random rnd(9);
    const CdoIsoClass x = random_cdo(rnd, 3);
    CHECK(cdo_from_json(to_json(x)) == x);
    const TdoIsoClass t(rnd.matrix(2), rnd.alt(2, 2));
    CHECK(tdo_from_json(to_json(t)) == t);
    const CdoMorphism h{rnd.alt(2, 4)};
    CHECK(morphism_from_json(to_json(h)) == h);
  }
}
