#pragma once

#include <cstddef>
#include <vector>

#include "betadix/integer.hpp"
#include "betadix/poly.hpp"

namespace betadix {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// adj(m), so that m * adj(m) = det(m) * I. Requires det(m) != 0.
IntMatrix adjugate(const IntMatrix& m, const Int& det);

/// Characteristic polynomial det(xI - m), monic, little-endian.
Poly characteristic_polynomial(const IntMatrix& m);

/// Column Hermite normal form of an n x m matrix of full row rank (m >= n):
/// the n x n basis H of its column lattice that is lower triangular with a
/// positive diagonal and 0 <= H(i,j) < H(i,i) for j < i.
IntMatrix column_hnf(const IntMatrix& m);

/// Reduces v modulo the column lattice of a column HNF in place; afterwards
/// 0 <= v[i] < H(i,i) for every i.
void reduce_mod_hnf(const IntMatrix& hnf, std::vector<Int>& v);

}  // namespace betadix
