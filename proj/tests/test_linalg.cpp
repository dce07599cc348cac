#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tcq/errors.hpp"
#include "tcq/linalg.hpp"
#include "tcq/rng.hpp"

using namespace tcq;

namespace {

Matrix from_rows(const FieldCtx& k, const std::vector<std::vector<int>>& rows) {
  Matrix m(k, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix random_matrix(const FieldCtx& k, std::size_t rows, std::size_t cols, SeededRng& rng) {
  Matrix m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.below(k.q()));
  }
  return m;
}

bool in_kernel(const Matrix& m, const std::vector<Int>& w) {
  for (const Int& c : m.mul_vec(w)) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel of the all-ones row over F_2") {
  FieldCtx k(2);
  auto basis = kernel_basis(from_rows(k, {{1, 1, 1}}));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Int>{1, 1, 0});
  CHECK(basis[1] == std::vector<Int>{1, 0, 1});
}

TEST_CASE("kernel over F_3 with a rank-1 square matrix") {
  FieldCtx k(3);
  auto basis = kernel_basis(from_rows(k, {{1, 2}, {2, 1}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Int>{1, 1});
}

TEST_CASE("rref shape and canonicality") {
  FieldCtx k(5);
  Matrix m = from_rows(k, {{0, 2, 1, 3}, {0, 4, 2, 1}, {0, 0, 0, 2}});
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  REQUIRE(r.pivot_cols == std::vector<std::size_t>{1, 3});
  // Pivot entries 1, pivot columns otherwise 0.
  for (std::size_t i = 0; i < r.rank; ++i) {
    CHECK(r.reduced.at(i, r.pivot_cols[i]) == 1);
    for (std::size_t i2 = 0; i2 < m.rows(); ++i2) {
      if (i2 != i) CHECK(r.reduced.at(i2, r.pivot_cols[i]) == 0);
    }
  }
  // Idempotent.
  CHECK(rref(r.reduced).reduced == r.reduced);
}

TEST_CASE("kernel vectors really lie in the kernel") {
  for (unsigned long qv : {2ul, 3ul, 1009ul}) {
    FieldCtx k((Int(qv)));
    SeededRng rng("kernel-prop", std::to_string(qv));
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(k, 4, 7, rng);
      RrefResult r = rref(m);
      auto basis = kernel_basis(m);
      CHECK(basis.size() == m.cols() - r.rank);
      for (const auto& w : basis) CHECK(in_kernel(m, w));
      // Each kernel vector has a 1 in 'its' free column and 0 in others.
      std::vector<bool> is_pivot(m.cols(), false);
      for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
      std::size_t bi = 0;
      for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        CHECK(basis[bi][f] == 1);
        std::size_t bj = 0;
        for (std::size_t f2 = 0; f2 < m.cols(); ++f2) {
          if (is_pivot[f2]) continue;
          if (bj != bi) CHECK(basis[bi][f2] == 0);
          ++bj;
        }
        ++bi;
      }
    }
  }
}

TEST_CASE("inverse of random and singular matrices") {
  FieldCtx k(1009);
  SeededRng rng("inverse-prop", "linalg");
  int invertible = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(k, 5, 5, rng);
    auto inv = inverse(m);
    if (!inv) continue;
    ++invertible;
    Matrix prod(k, 5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        Int acc = 0;
        for (std::size_t l = 0; l < 5; ++l) acc += m.at(i, l) * inv->at(l, j);
        prod.set(i, j, acc);
      }
    }
    CHECK(prod == Matrix::identity(k, 5));
  }
  CHECK(invertible > 15);  // singular matrices are rare at q = 1009

  Matrix sing = from_rows(k, {{1, 2}, {2, 4}});
  CHECK_FALSE(inverse(sing).has_value());
  CHECK_THROWS_AS(inverse(Matrix(k, 2, 3)), MathDomainError);
}

TEST_CASE("mul_vec and bounds checks") {
  FieldCtx k(7);
  Matrix m = from_rows(k, {{1, 2}, {3, 4}});
  CHECK(m.mul_vec({1, 1}) == std::vector<Int>{3, 0});
  CHECK_THROWS_AS(m.mul_vec({1, 1, 1}), MathDomainError);
  CHECK_THROWS_AS(m.at(2, 0), MathDomainError);
  CHECK_THROWS_AS(m.set(0, 2, 1), MathDomainError);
  m.set(0, 0, -1);
  CHECK(m.at(0, 0) == 6);
}
