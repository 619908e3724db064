#include <doctest.h>

#include <algorithm>
#include <set>

#include "chiralkit/errors.hpp"
#include "chiralkit/fock/fock_space.hpp"
#include "chiralkit/fock/qseries.hpp"
#include "support.hpp"

using namespace chiralkit;
using namespace chiralkit::fock;

namespace {

Vec vec(std::initializer_list<Rational> xs) {
  Vec v;
  for (const auto& x : xs) v.emplace_back(x);
  return v;
}

using HPair = std::pair<Rational, Rational>;
std::vector<HPair> conformal_weights(const std::vector<Sector>& sectors) {
  std::vector<HPair> out;
  for (const auto& s : sectors) out.emplace_back(s.h, s.hbar);
  std::sort(out.begin(), out.end(), [](const HPair& a, const HPair& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  return out;
}

State unit(std::size_t k) { return State{{k, Scalar(1)}}; }

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("model construction") {
    const auto m = build_model(Matrix::identity(2), Matrix(2, 2), Matrix::identity(2));
    CHECK(m.dual_basis == Matrix::identity(2));
    const auto d = build_model(Matrix::identity(2), Matrix(2, 2), Matrix{{2, 0}, {0, 3}});
    CHECK(d.dual_basis == Matrix({{Scalar(Rational(1, 2)), 0}, {0, Scalar(Rational(1, 3))}}));
    CHECK(d.dual_basis.transpose() * d.lattice_basis == Matrix::identity(2));
    const auto one = one_dim_model(Rational(1));
    CHECK(one.dual_basis.transpose() * one.lattice_basis == Matrix{{1}});
    CHECK_THROWS_AS(build_model(Matrix{{1, 2}, {2, 1}}, Matrix(2, 2), Matrix::identity(2)), NotPositiveDefinite);
    CHECK_THROWS_AS(build_model(Matrix::identity(2), Matrix{{0, 1}, {1, 0}}, Matrix::identity(2)), NotAntisymmetric);
    CHECK_THROWS_AS(build_model(Matrix::identity(2), Matrix(2, 2), Matrix{{1, 2}, {2, 4}}), SingularLattice);
  }

  TEST_CASE("dual lattice certificate on random models") {
    testing_support::Random rnd(51);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
      const auto m = build_model(rnd.positive_definite(n), rnd.antisymmetric(n), rnd.invertible(n, false));
      const Matrix pairing = m.dual_basis.transpose() * m.lattice_basis;
      CHECK(pairing.is_integral());
      const Scalar det = pairing.determinant();
      CHECK((det == Scalar(1) || det == Scalar(-1)));
    }
  }

  TEST_CASE("model json") {
    const auto m = model_from_json(Json::parse(R"({"n":2,"g":[["2","1"],["1","1"]],"B":[["0","1/2"],["-1/2","0"]],"L":[["1","0"],["0","3"]]})"));
    CHECK(model_from_json(to_json(m)).lattice_basis == m.lattice_basis);
    CHECK(to_json(one_dim_model(Rational(3, 4))).dump() == R"({"radius_unit":"3/4"})");
    CHECK_THROWS_AS(model_from_json(Json::parse(R"({"radius_unit":"1","n":1})")), ParseError);
    CHECK_THROWS_AS(model_from_json(Json::parse(R"({"n":1,"g":[["1"]],"L":[["1"]],"extra":1})")), ParseError);
  }

  TEST_CASE("spectrum points") {
    const auto one = one_dim_model(Rational(1));
    auto [a, b] = spectrum_point(one, vec({0}), vec({0}));
    CHECK(a == vec({0}));
    CHECK(b == vec({0}));
    auto [c, d] = spectrum_point(one, vec({2}), vec({-1}));
    CHECK(c == vec({Rational(-3, 2)}));
    CHECK(d == vec({Rational(1, 2)}));
    const auto m = build_model(Matrix::identity(2), Matrix{{0, 1}, {-1, 0}}, Matrix::identity(2));
    auto [e, f] = spectrum_point(m, vec({1, 0}), vec({0, 0}));
    CHECK(e == vec({Rational(-1, 2), Rational(-1, 2)}));
    CHECK(f == vec({Rational(1, 2), Rational(-1, 2)}));
    CHECK_THROWS_AS(spectrum_point(one_dim_model(Rational(2)), vec({1}), vec({0})), NotInLattice);
  }

  TEST_CASE("sector enumeration") {
    testing_support::Random rnd(52);
    const auto vac = enumerate_sectors(one_dim_model(Rational(5, 3)), 0);
    REQUIRE(vac.size() == 1);
    CHECK(vac[0].a_plus == vec({0}));
    CHECK(vac[0].a_minus == vec({0}));
    CHECK(enumerate_sectors(one_dim_model(Rational(1)), 2).size() == 13);
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
      const auto m = build_model(rnd.positive_definite(n), rnd.antisymmetric(n), rnd.invertible(n, false));
      for (const auto& s : enumerate_sectors(m, 2))
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(s.a_plus[j] - s.a_minus[j] == Scalar(2) * g_of(m, s.l)[j]);
          CHECK(s.a_plus[j] + s.a_minus[j] == Scalar(2) * (b_of(m, s.l)[j] - s.dual[j]));
        }
    }
  }

  TEST_CASE("one-dimensional labels") {
    const auto m = one_dim_model(Rational(1));
    for (const auto& s : enumerate_sectors(m, 3)) {
      const Rational l = s.l[0].re(), ls = s.dual[0].re();
      auto [plus, minus] = one_dim_labels(s);
      CHECK(plus == (l - ls) / 2);
      CHECK(minus == -(l + ls) / 2);
      CHECK(mpz_class((l - ls) - (l + ls)) % 2 == 0);
    }
  }

  TEST_CASE("fock truncation") {
    const Matrix g = Matrix::identity(1);
    const FockTruncation f0(g, vec({Rational(1, 3)}), 0);
    CHECK(f0.dim() == 1);
    CHECK(f0.mode(0, 0).apply(unit(0)) == State{{0, Scalar(Rational(-1, 6))}});
    const FockTruncation f3(g, vec({0}), 3);
    CHECK(f3.level_dimensions() == std::vector<std::size_t>{1, 1, 2, 3});
    for (int m = 1; m <= 3; ++m) CHECK(f3.mode(0, m).apply(unit(0)).empty());
    CHECK_THROWS_AS(f3.mode(0, 4), CutoffExceeded);
    CHECK_THROWS_AS(virasoro_mode(f3, -4), CutoffExceeded);
    CHECK(FockTruncation(Matrix::identity(2), vec({0, 0}), 4).level_dimensions() ==
          std::vector<std::size_t>{1, 2, 5, 10, 20});
  }

  TEST_CASE("heisenberg relations and commuting sectors") {
    const Matrix g{{2, 1}, {1, 1}};
    const Matrix ginv = g.inverse();
    const int N = 5;
    const FockTruncation f(g, vec({Rational(1, 2), -1}), N);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int m = -N; m <= N; ++m)
          for (int n = -N; n <= N; ++n) {
            const int guard = N - std::abs(m) - std::abs(n);
            if (guard < 0) continue;
            const Scalar expected = m + n == 0 ? Scalar(Rational(-m, 2)) * ginv(i, j) : Scalar(0);
            for (auto k : f.guarded(guard)) {
              const State lhs = commutator_apply(f.mode(i, m), f.mode(j, n), unit(k));
              CHECK(add_states(lhs, unit(k), -expected).empty());
            }
          }
    const Vec a = vec({1, 2});
    const FockTruncation h(g, a, 0);
    const Vec ga = ginv.apply(a);
    for (int i = 0; i < 2; ++i) CHECK(h.mode(i, 0).apply(unit(0)) == State{{0, Scalar(Rational(-1, 2)) * ga[i]}});
  }

  TEST_CASE("virasoro relations and central charge") {
    for (std::size_t n = 1; n <= 2; ++n) {
      const int N = 6;
      const Matrix g = n == 1 ? Matrix{{3}} : Matrix{{2, 1}, {1, 2}};
      const FockTruncation f(g, n == 1 ? vec({Rational(2, 3)}) : vec({1, -1}), N);
      std::vector<SparseOperator> L;
      for (int k = -N; k <= N; ++k) L.push_back(virasoro_mode(f, k));
      auto Lk = [&](int k) -> const SparseOperator& { return L[static_cast<std::size_t>(k + N)]; };
      for (int j = -N; j <= N; ++j)
        for (int k = -N; k <= N; ++k) {
          const int guard = N - std::abs(j) - std::abs(k);
          if (guard < 0 || std::abs(j + k) > N) continue;
          const Scalar central = j + k == 0 ? Scalar(Rational(static_cast<long>(n) * (j * j * j - j), 12)) : Scalar(0);
          for (auto v : f.guarded(guard)) {
            State rhs = Lk(j + k).apply(unit(v));
            for (auto& [r, x] : rhs) x *= Scalar(j - k);
            rhs = add_states(rhs, unit(v), central);
            CHECK(add_states(commutator_apply(Lk(j), Lk(k), unit(v)), rhs, Scalar(-1)).empty());
          }
        }
      for (int k = -3; k <= 3; ++k)
        for (int m = -3; m <= 3; ++m)
          for (auto v : f.guarded(N - std::abs(k) - std::abs(m)))
            CHECK(add_states(commutator_apply(Lk(k), f.mode(0, m), unit(v)), f.mode(0, k + m).apply(unit(v)),
                             Scalar(m))
                      .empty());
    }
  }

  TEST_CASE("lowest weights") {
    CHECK(lowest_weight(Matrix{{1}}, vec({2})) == Rational(-1));
    const auto s = make_sector(one_dim_model(Rational(1)), {1}, {0});
    CHECK(s.h == Rational(-1, 4));
    CHECK(s.hbar == Rational(-1, 4));
  }

  TEST_CASE("vertex exponents") {
    const auto m = one_dim_model(Rational(2, 3));
    const auto sectors = enumerate_sectors(m, 2);
    for (const auto& a : sectors)
      for (const auto& b : sectors) {
        auto [hol, antihol] = vertex_exponents(m, a, b);
        const Rational l = a.l[0].re(), ls = a.dual[0].re(), k = b.l[0].re(), ks = b.dual[0].re();
        CHECK(hol == -(l - ls) * (k - ks) / 2);
        CHECK(antihol == -(l + ls) * (k + ks) / 2);
        CHECK(hol - antihol == ls * k + ks * l);
      }
    auto [h0, a0] = vertex_exponents(m, sectors[0], sectors.back());
    CHECK(h0 == 0);
    CHECK(a0 == 0);
    CHECK_THROWS_AS(vertex_exponents(one_dim_model(Rational(1)), sectors[0], sectors[1]), ModelMismatch);
  }

  TEST_CASE("locality on random models") {
    testing_support::Random rnd(53);
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
      const auto m = build_model(rnd.positive_definite(n), trial % 2 ? rnd.antisymmetric(n) : Matrix(n, n),
                                 rnd.invertible(n, false));
      const auto report = ko_locality(m, 2);
      CHECK(report.violations == 0);
      for (const auto& e : report.entries)
        if (e.left == 0) {
          CHECK(e.hol == 0);
          CHECK(e.antihol == 0);
        }
    }
  }

  TEST_CASE("t-duality") {
    testing_support::Random rnd(54);
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 2));
      const auto m = build_model(rnd.positive_definite(n), Matrix(n, n), rnd.invertible(n, false));
      const auto d = t_dual(m);
      CHECK(t_dual(d).lattice_basis == m.lattice_basis);
      CHECK(same_lattice(d.dual_basis, m.g * m.lattice_basis));
      CHECK(conformal_weights(enumerate_sectors(m, 3)) == conformal_weights(enumerate_sectors(d, 3)));
      CHECK(partition_function(m, 2, 3) == partition_function(d, 2, 3));
    }
    const auto one = one_dim_model(Rational(1));
    CHECK(is_self_dual(one));
    CHECK(t_dual(one).lattice_basis == one.lattice_basis);
    CHECK_FALSE(is_self_dual(one_dim_model(Rational(2))));
    CHECK(*t_dual(one_dim_model(Rational(2, 5))).radius_unit == Rational(5, 2));
    CHECK_THROWS_AS(t_dual(build_model(Matrix::identity(2), Matrix{{0, 1}, {-1, 0}}, Matrix::identity(2))),
                    BFieldUnsupported);
    CHECK(same_lattice(Matrix{{1, 1}, {0, 1}}, Matrix::identity(2)));
    CHECK_FALSE(same_lattice(Matrix{{2, 0}, {0, 1}}, Matrix::identity(2)));
  }

  TEST_CASE("chiral sectors") {
    CHECK(chiral_sectors(one_dim_model(Rational(7, 5)), 10).size() == 1);
    std::set<long> labels;
    for (const auto& s : chiral_sectors(one_dim_model(Rational(1)), 4)) {
      CHECK(s.dual[0] == -s.l[0]);
      CHECK(s.a_minus == vec({0}));
      labels.insert(s.a_plus[0].re().get_num().get_si());
    }
    CHECK(labels == std::set<long>{-8, -6, -4, -2, 0, 2, 4, 6, 8});
    const auto m = build_model(Matrix{{2, 1}, {1, 1}}, Matrix(2, 2), Matrix::identity(2));
    CHECK(is_self_dual(m));
    const auto cs = chiral_sectors(m, 2);
    CHECK(cs.size() == 13);
    for (const auto& s : cs) CHECK(s.a_plus == vec({2 * (2 * s.l[0].re() + s.l[1].re()), 2 * (s.l[0].re() + s.l[1].re())}));
  }

  TEST_CASE("characters") {
    const QSeries ch = character(1, 0, 3);
    CHECK(ch.coefficient(0) == Scalar(1));
    CHECK(ch.coefficient(1) == Scalar(1));
    CHECK(ch.coefficient(2) == Scalar(2));
    CHECK(ch.coefficient(3) == Scalar(3));
    CHECK(ch.terms().size() == 4);
    CHECK(colored_partition_counts(2, 4) == std::vector<Rational>{1, 2, 5, 10, 20});
    const QSeries shifted = character(2, Rational(-1, 4), 2);
    CHECK(shifted.coefficient(Rational(3, 4)) == Scalar(2));
    CHECK((ch - ch).is_zero());
    CHECK((ch * ch.barred()).coefficient(1, 2) == Scalar(2));
  }
}
