#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "chiralkit/exactlin/scalar.hpp"

namespace chiralkit::exactlin {

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix transpose() const;
  Scalar determinant() const;
  /// Throws SingularMatrix.
  Matrix inverse() const;
  /// Determinant of the submatrix on the given rows and columns.
  Scalar minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_integral() const;
  bool is_zero() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  Matrix operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Positive definiteness of a real symmetric matrix (Sylvester's criterion).
bool is_positive_definite(const Matrix& m);

}  // namespace chiralkit::exactlin
