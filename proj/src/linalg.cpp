#include "semigb/linalg.hpp"

namespace semigb {

// r += c * s over columns [from, cols), entries canonical in [0, p).
// Accumulates in 64 bits and reduces once per entry.
static void axpy_row(std::uint32_t* r, const std::uint32_t* s,
                     std::uint64_t c, std::size_t from, std::size_t cols,
                     std::uint32_t p) {
  for (std::size_t k = from; k < cols; ++k) {
    std::uint64_t v = r[k] + c * s[k];
    r[k] = static_cast<std::uint32_t>(v % p);
  }
}

RrefResult rref(const MatrixGF& m) {
  RrefResult res{m, {}};
  MatrixGF& a = res.matrix;
  const std::uint32_t p = a.field().p;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pr = 0;  // next pivot row
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r) {
      if (a.at(r, pc) != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t k = pc; k < cols; ++k) {
        std::uint32_t tmp = a.at(pr, k);
        a.set(pr, k, a.at(sel, k));
        a.set(sel, k, tmp);
      }
    const std::uint32_t piv_inv = gf::inv(a.at(pr, pc), p);
    if (piv_inv != 1)
      for (std::size_t k = pc; k < cols; ++k)
        a.set(pr, k, gf::mul(a.at(pr, k), piv_inv, p));
    const std::uint32_t* prow = a.row(pr);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      std::uint32_t c = a.at(r, pc);
      if (c == 0) continue;
      axpy_row(a.row(r), prow, p - c, pc, cols, p);
    }
    res.pivot_cols.push_back(pc);
    ++pr;
  }
  return res;
}

std::size_t rank(const MatrixGF& m) { return rref(m).pivot_cols.size(); }

std::size_t kernel_dim(const MatrixGF& m) { return m.cols() - rank(m); }

}  // namespace semigb
