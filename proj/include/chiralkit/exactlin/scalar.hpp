#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chiralkit::exactlin {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Rejects a zero denominator.
Rational parse_rational(std::string_view text);

/// Element of Q(i): an exact Gaussian rational.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const { return is_real() && re_.get_den() == 1; }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q" for reals, otherwise "p/q+r/s i".
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Lexicographic on (re, im); only for use as a container key.
bool key_less(const Scalar& a, const Scalar& b);

Scalar pow(Scalar base, unsigned exponent);

}  // namespace chiralkit::exactlin
