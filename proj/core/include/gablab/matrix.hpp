#pragma once

#include <optional>
#include <vector>

#include "gablab/field.hpp"

namespace gablab {

/// Dense row-major matrix over F_{q^m}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

/// Determinant by elimination; the pivot is the first nonzero entry of the
/// column in row order. Throws Error if the matrix is not square.
Elem determinant(const Field& f, Matrix a);

/// Rank by Gaussian elimination over the field.
std::size_t rank(const Field& f, Matrix a);

/// Unique solution of the square system a * x = b, or nullopt if singular.
std::optional<std::vector<Elem>> solve(const Field& f, Matrix a, std::vector<Elem> b);

}  // namespace gablab
