#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcq/ffield.hpp"

namespace tcq {

// Dense matrix over F_q, row-major, entries reduced to [0, q).
class Matrix {
 public:
  Matrix(FieldCtx field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldCtx& field, std::size_t n);

  const FieldCtx& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t r, std::size_t c) const;
  // Stores the value reduced mod q.
  void set(std::size_t r, std::size_t c, const Int& v);

  std::vector<Int> mul_vec(const std::vector<Int>& v) const;

  bool operator==(const Matrix& other) const;

 private:
  FieldCtx field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // ascending
  std::size_t rank;
};

// Reduced row echelon form by Gauss-Jordan elimination. Pivots are chosen
// as the first nonzero entry in the leftmost unfinished column, scanning top
// to bottom, so the result and the pivot column list are canonical.
RrefResult rref(const Matrix& m);

// Basis of the right kernel, one vector per free column in ascending column
// order. The vector for free column f has a 1 in position f, 0 in every
// other free position, and the forced values in the pivot positions. Empty
// when the kernel is trivial.
std::vector<std::vector<Int>> kernel_basis(const Matrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace tcq
