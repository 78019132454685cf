#pragma once

#include <cstddef>
#include <vector>

#include "so4/scalar.hpp"

namespace so4 {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Scalar trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                  // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

/// Reduced row-echelon form: leading ones, zeros above and below each pivot,
/// zero rows dropped. Canonical for the row space.
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column, in echelon-canonical form.
std::vector<Vector> nullspace(const Matrix& m);

/// Canonical basis (rref rows) of the span of the given vectors of length n.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n);

}  // namespace so4
