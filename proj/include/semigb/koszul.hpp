#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semigb/buchberger.hpp"
#include "semigb/linalg.hpp"
#include "semigb/polynomial.hpp"

namespace semigb {

// Enforced practical caps for graded-piece enumeration.
struct KoszulCaps {
  static constexpr std::uint32_t max_vars = 6;    // x-variables
  static constexpr std::uint32_t max_degree = 12;
  static constexpr std::size_t max_generators = 10;
};

// Matrix of a graded map between direct sums of shifted copies of R,
// columns indexed by the source monomial basis, rows by the target one.
struct GradedMapMatrix {
  std::vector<std::uint32_t> source_shifts;  // d_{j_1...j_i} per summand
  MatrixGF matrix;
};

// (phi_1)_d : (+)_j R_{d - d_j} -> R_d, e_j -> f_j.
GradedMapMatrix phi1_matrix(const PolySequence& F, std::uint32_t d);

// (phi_2)_d : (+)_{i<j} R_{d - d_i - d_j} -> (+)_j R_{d - d_j},
// e_ij -> f_i e_j - f_j e_i.
GradedMapMatrix phi2_matrix(const PolySequence& F, std::uint32_t d);

// (phi_m)_d on the top Koszul term; injective in every degree.
GradedMapMatrix phim_matrix(const PolySequence& F, std::uint32_t d);

// dim_K H_1(K_.)_d = kernel_dim((phi_1)_d) - rank((phi_2)_d).
std::size_t h1_dimension(const PolySequence& F, std::uint32_t d);

// Least d <= cap with H_1(K_.)_d != 0.
std::optional<std::uint32_t> min_h1_degree(const PolySequence& F,
                                           std::uint32_t cap);

// Multiplication map x f : (R/<prefix>)_{t-deg f} -> (R/<prefix>)_t over
// standard-monomial bases; columns are normal forms of u*f against the
// prefix Groebner basis.
MatrixGF multiplication_matrix(const Polynomial& f,
                               const std::vector<Polynomial>& prefix_gb,
                               std::uint32_t t);

enum class DRegMethod { Direct, Series, Homology };

// d-regularity: every multiplication map injective below degree d, tested
// by the chosen route. The three routes agree (Diem's equivalence).
bool check_d_regular(const PolySequence& F, std::uint32_t d, DRegMethod m);

struct CryptoSemiregResult {
  bool semiregular = false;
  std::uint32_t D = 0;  // actual degree of regularity of <F>
};

// Computes the actual d_reg(<F>) from the reduced Groebner basis staircase
// and tests d_reg-regularity with all three methods (they must agree).
// Throws NotArtinianWithinCap when the quotient is not Artinian.
CryptoSemiregResult check_crypto_semiregular(const PolySequence& F);

// Pardue semi-regularity: each x f_i on the preceding quotient is injective
// or surjective at every degree. Scans each step until surjectivity onset;
// throws CapExceeded when a step's scan passes the degree cap undecided.
bool check_pardue_semiregular(const PolySequence& F);

// First fall degree over B = R/<x_1^q,...,x_n^q>: least d with
// syz(F mod)_d strictly larger than tsyz+(F mod)_d, where tsyz+ adds the
// Frobenius syzygies f_i^{q-1} e_i. Requires q = p (prime coefficient
// field); throws NoFallWithinCap when no fall occurs up to the cap.
std::uint32_t first_fall_degree(const PolySequence& F, std::uint32_t q);

// Sanity route behind Diem's prefix proposition: given H_1(F)_{<=D} = 0
// (verified here, else PreconditionUnverified), every proper prefix must
// satisfy the same vanishing.
bool prefix_vanishing_check(const PolySequence& F, std::uint32_t D);

struct KoszulReport {
  std::vector<std::uint32_t> degrees;
  std::vector<std::size_t> h1_dims;
  std::uint32_t d_regular_up_to = 0;
  bool is_crypto_semiregular = false;
  std::optional<bool> is_pardue_semiregular;   // nullopt: cap exceeded
  std::optional<std::uint32_t> d_reg_actual;   // nullopt: not Artinian
  std::optional<std::uint32_t> first_fall;     // nullopt: none within cap
};

KoszulReport koszul_report(const PolySequence& F, std::uint32_t degree_cap,
                           bool with_first_fall = false);

}  // namespace semigb
