#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semigb/linalg.hpp"

using namespace semigb;

namespace {
MatrixGF from_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                   std::uint32_t p) {
  MatrixGF m(rows.size(), rows.empty() ? 0 : rows[0].size(), FieldSpec(p));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

MatrixGF random_matrix(std::mt19937_64& rng, std::size_t rows,
                       std::size_t cols, std::uint32_t p) {
  MatrixGF m(rows, cols, FieldSpec(p));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, static_cast<std::uint32_t>(rng() % p));
  return m;
}
}  // namespace

TEST_CASE("rref basics") {
  MatrixGF id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 73);
  auto r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});

  MatrixGF zero(3, 4, FieldSpec(73));
  auto rz = rref(zero);
  CHECK(rz.matrix == zero);
  CHECK(rz.pivot_cols.empty());

  // p=73: [[2,4],[1,2]] -> [[1,2],[0,0]], pivots (0)
  auto rr = rref(from_rows({{2, 4}, {1, 2}}, 73));
  CHECK(rr.matrix == from_rows({{1, 2}, {0, 0}}, 73));
  CHECK(rr.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rank") {
  CHECK(rank(from_rows({{1, 0}, {0, 1}}, 73)) == 2);
  CHECK(rank(MatrixGF(4, 4, FieldSpec(73))) == 0);
  CHECK(kernel_dim(MatrixGF(5, 5, FieldSpec(73))) == 5);
  CHECK(kernel_dim(from_rows({{1, 0}, {0, 1}}, 73)) == 0);
  CHECK(kernel_dim(from_rows({{1, 1}}, 73)) == 1);
}

TEST_CASE("rref idempotent and row space preserved") {
  std::mt19937_64 rng(99);
  for (std::uint32_t p : {2u, 73u, 65521u}) {
    for (int i = 0; i < 50; ++i) {
      std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
      MatrixGF m = random_matrix(rng, rows, cols, p);
      auto r1 = rref(m);
      auto r2 = rref(r1.matrix);
      CHECK(r1.matrix == r2.matrix);
      CHECK(r1.pivot_cols == r2.pivot_cols);
      // each original row eliminates to zero against the RREF rows
      for (std::size_t row = 0; row < rows; ++row) {
        std::vector<std::uint32_t> v(cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = m.at(row, c);
        for (std::size_t k = 0; k < r1.pivot_cols.size(); ++k) {
          std::uint32_t c = v[r1.pivot_cols[k]];
          if (c == 0) continue;
          for (std::size_t j = 0; j < cols; ++j)
            v[j] = gf::sub(v[j], gf::mul(c, r1.matrix.at(k, j), p), p);
        }
        for (auto x : v) CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t p = (i % 2 == 0) ? 73 : 65521;
    std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
    MatrixGF m = random_matrix(rng, rows, cols, p);
    CHECK(rank(m) + kernel_dim(m) == cols);
    CHECK(rank(m) <= std::min(rows, cols));
  }
}
