#pragma once

#include <stdexcept>
#include <string>

namespace chiralkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input. The CLI reports these with exit status 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed. The CLI reports these with exit status 2.
class MathError : public Error {
 public:
  using Error::Error;
};

#define CHIRALKIT_ERROR(Name, Base)     \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  };

CHIRALKIT_ERROR(ParseError, InputError)
CHIRALKIT_ERROR(UnknownFamily, InputError)

CHIRALKIT_ERROR(SingularMatrix, MathError)
CHIRALKIT_ERROR(DimensionMismatch, MathError)
CHIRALKIT_ERROR(DivisionByZero, MathError)
CHIRALKIT_ERROR(NotFirstOrder, MathError)
CHIRALKIT_ERROR(NotASymmetry, MathError)
CHIRALKIT_ERROR(NonLinearEL, MathError)
CHIRALKIT_ERROR(NotPositiveDefinite, MathError)
CHIRALKIT_ERROR(NotAntisymmetric, MathError)
CHIRALKIT_ERROR(SingularLattice, MathError)
CHIRALKIT_ERROR(NotInLattice, MathError)
CHIRALKIT_ERROR(ModelMismatch, MathError)
CHIRALKIT_ERROR(BFieldUnsupported, MathError)
CHIRALKIT_ERROR(CutoffExceeded, MathError)

#undef CHIRALKIT_ERROR

}  // namespace chiralkit
