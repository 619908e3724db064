#pragma once

#include <random>

#include "chiralkit/coisson/bracket.hpp"
#include "chiralkit/exactlin/alt_tensor.hpp"
#include "chiralkit/exactlin/matrix.hpp"
#include "chiralkit/fock/lattice.hpp"

namespace testing_support {

using chiralkit::exactlin::AltTensor;
using chiralkit::exactlin::Matrix;
using chiralkit::exactlin::Rational;
using chiralkit::exactlin::Scalar;
using chiralkit::jet::DiffPoly;

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 5, int den = 4) {
    Rational r(integer(-span, span), integer(1, den));
    r.canonicalize();
    return r;
  }
  Scalar gaussian(int span = 5, int den = 4) { return Scalar(rational(span, den), rational(span, den)); }

  Matrix matrix(std::size_t n, bool complex = true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = complex ? gaussian() : Scalar(rational());
    return m;
  }

  Matrix invertible(std::size_t n, bool complex = true) {
    for (;;) {
      Matrix m = matrix(n, complex);
      if (!m.determinant().is_zero()) return m;
    }
  }

  /// AᵀA + I for a random rational A.
  Matrix positive_definite(std::size_t n) {
    const Matrix a = matrix(n, false);
    return a.transpose() * a + Matrix::identity(n);
  }

  Matrix antisymmetric(std::size_t n) {
    Matrix b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) {
        b(r, c) = Scalar(rational());
        b(c, r) = -b(r, c);
      }
    return b;
  }

  AltTensor alt(std::size_t degree, std::size_t n, std::size_t value_dim = 1) {
    AltTensor t(degree, n, value_dim);
    for (const auto& idx : chiralkit::exactlin::increasing_tuples(degree, n)) {
      std::vector<Scalar> v(value_dim);
      for (auto& x : v) x = gaussian();
      t.set(idx, v);
    }
    return t;
  }

  /// Density in canonical jets x^i, ∂_σx^i, p_i, ∂_σp_i with trig factors.
  DiffPoly density(std::size_t fields, int terms = 2, int max_degree = 2) {
    using namespace chiralkit::jet;
    DiffPoly out;
    for (int t = 0; t < terms; ++t) {
      DiffPoly mono(Scalar(rational(3, 2)) + Scalar(0, 1) * Scalar(integer(-1, 1)));
      if (mono.is_zero()) mono = DiffPoly(1);
      const int mode = integer(-2, 2);
      if (mode != 0) mono = mono * DiffPoly(trig(mode));
      const int degree = integer(1, max_degree);
      for (int d = 0; d < degree; ++d) {
        const int f = integer(0, static_cast<int>(fields) - 1);
        const int s = integer(0, 1);
        mono = mono * (coin() ? DiffPoly(xvar(f, 0, s)) : DiffPoly(pvar(f, s)));
      }
      out += mono;
    }
    return out;
  }

 private:
  std::mt19937 gen_;
};

}  // namespace testing_support
