#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "acurv/rational.hpp"

namespace acurv {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Doubles as the order-2 tensor
// type: entry (i, j) is the coordinate M_ij, 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws ShapeError if the rows are ragged.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  // E^{(k,l)}: one at (k, l), zero elsewhere.
  static Matrix unit(std::size_t n, std::size_t k, std::size_t l);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& data() const { return data_; }

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

Rational dot(const Vector& x, const Vector& y);
// x^T G y.
Rational bilinear(const Matrix& g, const Vector& x, const Vector& y);

// Exact Gauss-Jordan elimination. Pivots are the first nonzero entry in each
// column scanning rows top-down; free variables are set to zero.
std::optional<Vector> solve_linear_system(Matrix lhs, Vector rhs);

std::optional<Matrix> inverse(const Matrix& m);

std::size_t rank(Matrix m);

std::ostream& operator<<(std::ostream& out, const Matrix& m);

}  // namespace acurv
