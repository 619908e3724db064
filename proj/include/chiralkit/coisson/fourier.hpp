#pragma once

#include "chiralkit/coisson/bracket.hpp"

namespace chiralkit::coisson {

/// Canonical representative of a density modulo the image of D_σ.
/// Within each shape (fields, coefficient families, trig mode) the image of
/// D_σ is put in echelon form with pivots on the highest-weight,
/// most-differentiated monomial; the remainder avoids every pivot.
DiffPoly normal_form(const DiffPoly& density);

/// Class of ∫ a dσ.
class FourierClass {
 public:
  FourierClass() = default;
  FourierClass(const LocalDensity& representative);

  const DiffPoly& normal_form() const { return nf_; }
  LocalDensity density() const { return LocalDensity(nf_); }
  bool is_zero() const { return nf_.is_zero(); }

  FourierClass& operator+=(const FourierClass& o);
  friend FourierClass operator+(FourierClass a, const FourierClass& b) { return a += b; }
  friend FourierClass operator-(FourierClass a, const FourierClass& b) { return a += Scalar(-1) * b; }
  friend FourierClass operator*(const Scalar& s, const FourierClass& a);
  friend bool operator==(const FourierClass&, const FourierClass&) = default;

 private:
  DiffPoly nf_;
};

/// {∫a, ∫b}: the class of the δ-coefficient after transport to σ′.
FourierClass fourier_bracket(const FourierClass& a, const FourierClass& b, const BracketTable& t);

/// {A,{B,C}} + {B,{C,A}} + {C,{A,B}}.
FourierClass jacobi_residual(const BracketTable& t, const LocalDensity& a, const LocalDensity& b, const LocalDensity& c);

}  // namespace chiralkit::coisson
