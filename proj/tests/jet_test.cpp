#include <doctest.h>

#include "chiralkit/errors.hpp"
#include "chiralkit/jet/expr.hpp"
#include "chiralkit/jet/forms.hpp"
#include "chiralkit/jet/lagrangian.hpp"
#include "support.hpp"

using namespace chiralkit;
using namespace chiralkit::jet;

namespace {

// Random polynomial in field jets of τ- and σ-order ≤ 2 with coefficient symbols.
DiffPoly random_field_poly(testing_support::Random& rnd, int fields) {
  DiffPoly out;
  for (int t = 0; t < 3; ++t) {
    DiffPoly mono(Scalar(rnd.rational(), rnd.rational()));
    switch (rnd.integer(0, 3)) {
      case 0: mono = mono * DiffPoly(hol(rnd.integer(0, 1))); break;
      case 1: mono = mono * DiffPoly(antihol(rnd.integer(0, 1))); break;
      case 2: mono = mono * DiffPoly(trig(rnd.integer(-2, 2))); break;
      default: break;
    }
    for (int d = rnd.integer(1, 3); d > 0; --d)
      mono = mono * DiffPoly(xvar(rnd.integer(0, fields - 1), rnd.integer(0, 2), rnd.integer(0, 2)));
    out += mono;
  }
  return out;
}

DiffPoly P(int f = 0) { return DiffPoly(xvar(f, 1, 0)); }
DiffPoly Q(int f = 0) { return DiffPoly(xvar(f, 0, 1)); }

}  // namespace

TEST_SUITE("jet") {
  TEST_CASE("total derivatives commute") {
    testing_support::Random rnd(21);
    for (int trial = 0; trial < 40; ++trial) {
      const DiffPoly p = random_field_poly(rnd, 2);
      CHECK(total_derivative(Direction::Tau, total_derivative(Direction::Sigma, p)) ==
            total_derivative(Direction::Sigma, total_derivative(Direction::Tau, p)));
    }
  }

  TEST_CASE("coefficient symbols") {
    const Scalar i(0, 1);
    CHECK(total_derivative(Direction::Sigma, DiffPoly(hol())) == i * DiffPoly(hol(1)));
    CHECK(total_derivative(Direction::Sigma, DiffPoly(antihol())) == -i * DiffPoly(antihol(1)));
    CHECK(total_derivative(Direction::Tau, DiffPoly(trig(3))).is_zero());
    CHECK(total_derivative(Direction::Sigma, DiffPoly(trig(3))) == Scalar(0, 3) * DiffPoly(trig(3)));
    CHECK(DiffPoly(trig(2)) * DiffPoly(trig(-2)) == DiffPoly(1));
    CHECK(dz(0) == Scalar(Rational(1, 2)) * (P() - i * Q()));
    CHECK_THROWS_AS(total_derivative(Direction::Tau, DiffPoly(pvar(0))), MathError);
  }

  TEST_CASE("parser and printer round trip") {
    testing_support::Random rnd(22);
    for (int trial = 0; trial < 40; ++trial) {
      const DiffPoly p = random_field_poly(rnd, 3);
      CHECK(parse_expr(to_text(p)) == p);
      CHECK(diffpoly_from_json(to_json(p)) == p);
    }
    CHECK(parse_expr("dz.x1") == dz(0));
    CHECK(parse_expr("(x1+x2)^2/2") == Scalar(Rational(1, 2)) * (DiffPoly(xvar(0)) + DiffPoly(xvar(1))).pow(2));
    CHECK(parse_expr("e(1)*e(-1)") == DiffPoly(1));
    CHECK(to_text(parse_expr("-3/4*i*e(-2)*ds.p2")) == "-3/4*i*e(-2)*ds.p2");
    CHECK_THROWS_AS(parse_expr("x0"), ParseError);
    CHECK_THROWS_AS(parse_expr("x1/x2"), ParseError);
    CHECK_THROWS_AS(parse_expr("2*(x1"), ParseError);
    CHECK_THROWS_AS(parse_expr("q1"), ParseError);
  }

  TEST_CASE("free boson equations") {
    const Lagrangian l = free_boson_lagrangian();
    const auto el = euler_lagrange(l);
    REQUIRE(el.size() == 1);
    CHECK(el[0] == Scalar(0, -1) * (DiffPoly(xvar(0, 2, 0)) + DiffPoly(xvar(0, 0, 2))));
    VariationalForm gamma;
    gamma.add({xvar(0)}, Horizontal::Sigma, Scalar(0, 1) * P());
    gamma.add({xvar(0)}, Horizontal::Tau, Scalar(0, -1) * Q());
    CHECK(variational_one_form(l) == gamma);
    CHECK(OnShellRules(l).is_free_wave());
  }

  TEST_CASE("bicomplex identity: δL + dγ = E δx") {
    testing_support::Random rnd(23);
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
      const Lagrangian l = sigma_model_lagrangian(rnd.positive_definite(n), rnd.antisymmetric(n));
      const auto el = euler_lagrange(l);
      VariationalForm expected;
      for (std::size_t k = 0; k < n; ++k) expected.add({xvar(static_cast<int>(k))}, Horizontal::TauSigma, el[k]);
      CHECK(vertical_d(l.form()) + horizontal_d(variational_one_form(l)) == expected);
    }
  }

  TEST_CASE("d squares to zero") {
    testing_support::Random rnd(24);
    for (int trial = 0; trial < 10; ++trial) {
      const auto w = VariationalForm::horizontal(random_field_poly(rnd, 2), Horizontal::One);
      CHECK(horizontal_d(horizontal_d(w)).is_zero());
      CHECK(vertical_d(vertical_d(w)).is_zero());
      CHECK((horizontal_d(vertical_d(w)) + vertical_d(horizontal_d(w))).is_zero());
    }
  }

  TEST_CASE("prolongation of a translation is a total derivative") {
    testing_support::Random rnd(25);
    Generator dt{{P(0), P(1)}};
    for (int trial = 0; trial < 20; ++trial) {
      DiffPoly p;
      const DiffPoly raw = random_field_poly(rnd, 2);
      for (const auto& [m, c] : raw.terms())
        if (m.symbols.empty()) p.add_term(m, c);
      CHECK(prolong(dt, p) == total_derivative(Direction::Tau, p));
    }
  }

  TEST_CASE("lagrangian validation") {
    CHECK_THROWS_AS(Lagrangian(parse_expr("dt.dt.x1*x1"), 1), NotFirstOrder);
    CHECK_THROWS_AS(OnShellRules(Lagrangian(parse_expr("x1^2*dt.x1^2"), 1)), NonLinearEL);
    const Lagrangian l = free_boson_lagrangian();
    CHECK(restrict_to_sol0(DiffPoly(xvar(0, 2, 1)), l) == -DiffPoly(xvar(0, 0, 3)));
    CHECK(reduce_free_wave(DiffPoly(xvar(0, 3, 0))) == -DiffPoly(xvar(0, 1, 2)));
  }

  TEST_CASE("form text and json") {
    const VariationalForm g = variational_one_form(free_boson_lagrangian());
    CHECK(to_text(g) == "(-i*ds.x1) delta(x1) ^ dtau + (i*dt.x1) delta(x1) ^ dsigma");
    CHECK(form_from_json(to_json(g)) == g);
  }
}
