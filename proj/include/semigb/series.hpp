#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "semigb/monomial.hpp"

namespace semigb {

// Integer power-series prefix with truncation metadata.
struct TruncatedSeries {
  enum class Truncation {
    ByBracket,    // the [.] rule fired: next untruncated coefficient <= 0
    ByPrecision,  // computed only up to the requested bound
  };

  std::vector<mpz_class> coeffs;  // c_0 .. c_k
  Truncation truncation = Truncation::ByPrecision;

  std::size_t size() const { return coeffs.size(); }
};

struct DegreeOfRegularity {
  std::optional<std::uint32_t> value;  // empty: infinite within the bound
  std::uint32_t bound = 0;             // bound used when reporting infinite

  bool finite() const { return value.has_value(); }
};

struct HilbertData {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> degrees;
  TruncatedSeries hs_top;         // for R/<F^top>
  DegreeOfRegularity d_reg;
  TruncatedSeries hs_hom_prefix;  // for R'/<F^h>, mod z^D (empty if D infinite)
};

// Raw coefficients c_0..c_len of prod_j (1 - z^{d_j}) / (1 - z)^n,
// no truncation rule applied (values may be negative).
std::vector<mpz_class> series_coefficients(
    std::uint32_t n, const std::vector<std::uint32_t>& degrees,
    std::uint32_t len);

// [prod_j (1 - z^{d_j}) / (1 - z)^n]: exact coefficients, truncated at the
// first coefficient <= 0 (ByBracket) or at `precision` (ByPrecision),
// whichever comes first.
TruncatedSeries semiregular_series(std::uint32_t n,
                                   const std::vector<std::uint32_t>& degrees,
                                   std::uint32_t precision);

// Index of the first non-positive coefficient of the series above;
// infinite (within `bound`) if all of c_0..c_bound are positive.
DegreeOfRegularity degree_of_regularity(
    std::uint32_t n, const std::vector<std::uint32_t>& degrees,
    std::uint32_t bound);

// First D coefficients of prod_i (1 - z^{d_i}) / (1 - z)^{n+1}; requires a
// finite degree of regularity D (throws NotArtinian otherwise). Equals the
// running cumulative sums of the semiregular series coefficients.
TruncatedSeries homogenized_prefix(std::uint32_t n,
                                   const std::vector<std::uint32_t>& degrees);

// Hilbert function of R/<lms> at degree d: number of degree-d monomials in
// `nvars` variables divisible by no element of lms. Explicit enumeration.
std::size_t hf_from_staircase(const std::vector<Monomial>& lms,
                              std::size_t nvars, std::uint32_t d);

HilbertData hilbert_data(std::uint32_t n,
                         const std::vector<std::uint32_t>& degrees,
                         std::uint32_t precision);

}  // namespace semigb
