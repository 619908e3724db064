#include <doctest.h>

#include "chiralkit/errors.hpp"
#include "chiralkit/exactlin/echelon.hpp"
#include "chiralkit/exactlin/json_io.hpp"
#include "support.hpp"

using namespace chiralkit;
using namespace chiralkit::exactlin;

namespace {

// Brute-force pullback: sum over every tuple b of t(b) Π inv(b_r, a_r).
Scalar pullback_oracle(const AltTensor& t, const Matrix& inv, const Index& a) {
  const std::size_t k = a.size(), n = inv.rows();
  Scalar total;
  Index b(k, 0);
  for (;;) {
    Scalar weight(1);
    for (std::size_t r = 0; r < k; ++r) weight *= inv(b[r], a[r]);
    if (!weight.is_zero()) total += weight * t.at(b);
    std::size_t pos = 0;
    while (pos < k && ++b[pos] == n) b[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

}  // namespace

TEST_SUITE("exactlin") {
  TEST_CASE("scalar arithmetic and text") {
    const Scalar a = Scalar::parse("1/2+3/4 i");
    CHECK(a.re() == Rational(1, 2));
    CHECK(a.im() == Rational(3, 4));
    CHECK(Scalar::parse("-i") == Scalar(0, -1));
    CHECK(Scalar::parse("3 i") == Scalar(0, 3));
    CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
    CHECK(a / a == Scalar(1));
    CHECK(Scalar::parse(a.str()) == a);
    CHECK(Scalar(Rational(-2, 6)).str() == "-1/3");
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/2 +"), ParseError);
    CHECK(pow(Scalar(0, 1), 3) == Scalar(0, -1));
  }

  TEST_CASE("matrix inverse, determinant and minors") {
    const Matrix m{{2, 1}, {5, 3}};
    CHECK(m.determinant() == Scalar(1));
    CHECK(m * m.inverse() == Matrix::identity(2));
    CHECK(m.minor({0}, {1}) == Scalar(1));
    CHECK_THROWS_AS(Matrix({{1, 2}, {2, 4}}).inverse(), SingularMatrix);
    CHECK(is_positive_definite(Matrix{{2, 1}, {1, 2}}));
    CHECK_FALSE(is_positive_definite(Matrix{{1, 2}, {2, 1}}));
    CHECK(Matrix({{0, 1}, {-1, 0}}).is_antisymmetric());
  }

  TEST_CASE("random inverses") {
    testing_support::Random rnd(11);
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix m = rnd.invertible(static_cast<std::size_t>(rnd.integer(1, 4)));
      CHECK(m.inverse() * m == Matrix::identity(m.rows()));
      CHECK(m.inverse().determinant() * m.determinant() == Scalar(1));
    }
  }

  TEST_CASE("alternating tensors") {
    Index idx{2, 0, 1};
    CHECK(sort_with_sign(idx) == 1);
    CHECK(idx == Index{0, 1, 2});
    Index rep{1, 1};
    CHECK(sort_with_sign(rep) == 0);
    AltTensor t(2, 3);
    t.set({1, 0}, Scalar(5));
    CHECK(t.at({0, 1}) == Scalar(-5));
    CHECK(t.at({1, 1}).is_zero());
    CHECK(increasing_tuples(2, 4).size() == 6);
  }

  TEST_CASE("pullback agrees with the multilinear definition") {
    testing_support::Random rnd(3);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(2, 4));
      const std::size_t k = static_cast<std::size_t>(rnd.integer(1, static_cast<int>(n)));
      const Matrix mu = rnd.invertible(n);
      const AltTensor t = rnd.alt(k, n);
      const AltTensor pulled = alt_pullback(k, mu, t);
      const Matrix inv = mu.inverse();
      for (const auto& a : increasing_tuples(k, n)) CHECK(pulled.at(a) == pullback_oracle(t, inv, a));
    }
  }

  TEST_CASE("echelon reduction and solve") {
    using Basis = EchelonBasis<int>;
    Basis b;
    CHECK(b.insert({{0, Scalar(1)}, {1, Scalar(1)}}, 0));
    CHECK(b.insert({{1, Scalar(1)}, {2, Scalar(2)}}, 1));
    CHECK_FALSE(b.insert({{0, Scalar(1)}, {1, Scalar(2)}, {2, Scalar(2)}}, 2));
    auto combo = b.solve({{0, Scalar(2)}, {1, Scalar(3)}, {2, Scalar(2)}});
    REQUIRE(combo);
    CHECK(combo->at(0) == Scalar(2));
    CHECK(combo->at(1) == Scalar(1));
    CHECK_FALSE(b.solve({{0, Scalar(1)}}));
    CHECK(b.reduce({{2, Scalar(2)}}).count(2) == 0);
  }

  TEST_CASE("json round trips") {
    testing_support::Random rnd(5);
    const Matrix m = rnd.matrix(3);
    CHECK(matrix_from_json(to_json(m)) == m);
    const AltTensor t = rnd.alt(2, 3, 2);
    CHECK(tensor_from_json(to_json(t)) == t);
    const std::vector<Scalar> v{Scalar(1), Scalar(0, Rational(-1, 3))};
    CHECK(vector_from_json(to_json(v)) == v);
    CHECK(scalar_from_json(Json(7)) == Scalar(7));
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["1","2"]])")), ParseError);
  }
}
