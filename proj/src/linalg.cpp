#include "tcq/linalg.hpp"

#include <utility>

#include "tcq/errors.hpp"

namespace tcq {

Matrix::Matrix(FieldCtx field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix Matrix::identity(const FieldCtx& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
  return m;
}

const Int& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw MathDomainError("matrix index out of range");
  return e_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Int& v) {
  if (r >= rows_ || c >= cols_) throw MathDomainError("matrix index out of range");
  e_[r * cols_ + c] = field_.reduce(v);
}

std::vector<Int> Matrix::mul_vec(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw MathDomainError("vector length does not match column count");
  std::vector<Int> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += e_[i * cols_ + j] * v[j];
    r[i] = field_.reduce(acc);
  }
  return r;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  const FieldCtx& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // First nonzero entry at or below `row` in this column.
    std::size_t sel = row;
    while (sel < m.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Int tmp = r.at(row, j);
        r.set(row, j, r.at(sel, j));
        r.set(sel, j, tmp);
      }
    }
    const Int scale = k.inv(r.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) r.set(row, j, k.mul(r.at(row, j), scale));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Int f = r.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) {
        r.set(i, j, k.sub(r.at(i, j), k.mul(f, r.at(row, j))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rank = pivots.size();
  return RrefResult{std::move(r), std::move(pivots), rank};
}

std::vector<std::vector<Int>> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const FieldCtx& k = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Int>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    // Free column f: set variable f to 1, other free variables to 0, and
    // read the pivot variables off the reduced rows.
    std::vector<Int> w(m.cols(), 0);
    w[f] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
      w[rr.pivot_cols[r]] = k.neg(rr.reduced.at(r, f));
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw MathDomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, 1);
  }
  RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= rr.pivot_cols.size() || rr.pivot_cols[i] != i) return std::nullopt;
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rr.reduced.at(i, n + j));
  }
  return inv;
}

}  // namespace tcq
