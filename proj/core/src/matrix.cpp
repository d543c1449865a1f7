#include "gablab/matrix.hpp"

#include <utility>

#include "gablab/error.hpp"

namespace gablab {

namespace {

void swap_rows(Matrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

}  // namespace

Elem determinant(const Field& f, Matrix a) {
  if (a.rows() != a.cols()) throw Error("determinant: matrix is not square");
  const std::size_t n = a.rows();
  Elem det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).code == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      swap_rows(a, piv, col);
      det = f.neg(det);
    }
    const Elem p = a(col, col);
    det = f.mul(det, p);
    const Elem pinv = f.inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).code == 0) continue;
      const Elem factor = f.mul(a(r, col), pinv);
      for (std::size_t c = col; c < n; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(col, c)));
    }
  }
  return det;
}

std::size_t rank(const Field& f, Matrix a) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).code == 0) ++piv;
    if (piv == a.rows()) continue;
    swap_rows(a, piv, row);
    const Elem pinv = f.inv(a(row, col));
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (a(r, col).code == 0) continue;
      const Elem factor = f.mul(a(r, col), pinv);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    ++row;
  }
  return row;
}

std::optional<std::vector<Elem>> solve(const Field& f, Matrix a, std::vector<Elem> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error("solve: system must be square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).code == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      swap_rows(a, piv, col);
      std::swap(b[piv], b[col]);
    }
    const Elem pinv = f.inv(a(col, col));
    for (std::size_t c = col; c < n; ++c) a(col, c) = f.mul(a(col, c), pinv);
    b[col] = f.mul(b[col], pinv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).code == 0) continue;
      const Elem factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(col, c)));
      b[r] = f.sub(b[r], f.mul(factor, b[col]));
    }
  }
  return b;
}

}  // namespace gablab
