#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "semigb/buchberger.hpp"
#include "semigb/linalg.hpp"
#include "semigb/polynomial.hpp"

namespace semigb {

// Module term t * e_index labeling a representation h = sum a_i f_i.
struct Signature {
  Monomial mono;
  std::size_t index = 0;  // 0-based generator index

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.index == b.index && a.mono == b.mono;
  }
};

// Schreyer order induced by the input leading monomials:
// t e_i < s e_j iff LM(t f_i) < LM(s f_j); ties by larger index smaller.
class SchreyerOrder {
 public:
  explicit SchreyerOrder(std::vector<Monomial> input_lms)
      : lms_(std::move(input_lms)) {}

  int compare(const Signature& a, const Signature& b) const {
    int c = drl_compare(a.mono * lms_[a.index], b.mono * lms_[b.index]);
    if (c != 0) return c;
    if (a.index != b.index) return a.index > b.index ? -1 : 1;
    return 0;
  }

  // Degree of the labeled polynomial: deg(t) + deg(f_index).
  std::uint32_t poly_degree(const Signature& s) const {
    return s.mono.degree() + lms_[s.index].degree();
  }

 private:
  std::vector<Monomial> lms_;
};

struct LabeledPoly {
  Polynomial poly;
  Signature sig;
};

// Signature-based engine (F5-style): Schreyer ordering, pre-seeded
// trivial-syzygy signatures LM(f_j) e_i for i < j, syzygy criterion,
// duplicate-signature rule, sigma-reductions only. Affine inputs run the
// homogenize / solve / dehomogenize pipeline. The result is inter-reduced
// to the reduced Groebner basis.
GroebnerBasis f5_gb(const PolySequence& F, const EngineOptions& opts = {});

struct MacaulayMatrix {
  std::uint32_t degree = 0;
  bool cumulative = true;
  // row (t, i) encodes t * f_i
  std::vector<std::pair<Monomial, std::size_t>> row_labels;
  std::vector<Monomial> col_labels;  // strictly descending
  MatrixGF body;
};

// M_{<=d}(F): rows all (t, i) with deg(t f_i) <= d (cumulative) or
// deg(t f_i) = d (homogeneous slice).
MacaulayMatrix build_macaulay(const PolySequence& F, std::uint32_t d,
                              bool cumulative);

struct MacaulayResult {
  GroebnerBasis gb;  // reduced GB at sd_mac; partial extraction otherwise
  std::optional<std::uint32_t> sd_mac;
  std::uint32_t dmax = 0;

  bool reached() const { return sd_mac.has_value(); }
};

// Scans d = min d_i .. dmax; at each d takes the RREF of M_{<=d}(F),
// extracts the minimal rows and tests the Groebner property of <F> by
// S-pair checks plus membership of each f_i. sd_mac is the first d that
// succeeds; detection is independent of the other engines.
MacaulayResult macaulay_gb(const PolySequence& F, std::uint32_t dmax);

// ceil(N^omega) with N = C(n+d, n), exact big-integer binomial.
// Requires 2 <= omega < 3.
mpz_class complexity_estimate(std::uint32_t n, std::uint32_t d, double omega);

}  // namespace semigb
