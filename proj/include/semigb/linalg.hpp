#pragma once

#include <cstdint>
#include <vector>

#include "semigb/gf.hpp"

namespace semigb {

// Dense row-major matrix over F_p with context-level modulus.
class MatrixGF {
 public:
  MatrixGF() = default;
  MatrixGF(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    data_[r * cols_ + c] = v % field_.p;
  }

  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const {
    return data_.data() + r * cols_;
  }

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  MatrixGF matrix;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
};

// Reduced row echelon form. Deterministic pivoting: first nonzero entry
// scanning top-to-bottom, left-to-right.
RrefResult rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

// cols - rank: dimension of the right kernel.
std::size_t kernel_dim(const MatrixGF& m);

}  // namespace semigb
