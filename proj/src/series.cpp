#include "semigb/series.hpp"

#include <numeric>

#include "semigb/errors.hpp"

namespace semigb {

// Coefficients c_0..c_len of prod_j (1 - z^{d_j}) / (1 - z)^n. Division by
// (1 - z)^n is n prefix-sum passes over the numerator's coefficient array.
static std::vector<mpz_class> series_prefix(
    std::uint32_t n, const std::vector<std::uint32_t>& degrees,
    std::size_t len) {
  for (auto d : degrees)
    if (d == 0) throw InvalidDegree("generator degree must be >= 1");
  std::vector<mpz_class> c(len + 1, 0);
  c[0] = 1;
  for (auto d : degrees) {
    // multiply by (1 - z^d), in place, high to low
    for (std::size_t k = len + 1; k-- > d;) c[k] -= c[k - d];
  }
  for (std::uint32_t pass = 0; pass < n; ++pass)
    for (std::size_t k = 1; k <= len; ++k) c[k] += c[k - 1];
  return c;
}

std::vector<mpz_class> series_coefficients(
    std::uint32_t n, const std::vector<std::uint32_t>& degrees,
    std::uint32_t len) {
  if (n < 1) throw InvalidDegree("need n >= 1 variables");
  return series_prefix(n, degrees, len);
}

TruncatedSeries semiregular_series(std::uint32_t n,
                                   const std::vector<std::uint32_t>& degrees,
                                   std::uint32_t precision) {
  if (n < 1) throw InvalidDegree("need n >= 1 variables");
  if (precision < 1) throw InvalidDegree("need precision >= 1");
  auto c = series_prefix(n, degrees, precision);
  TruncatedSeries out;
  for (std::size_t k = 0; k <= precision; ++k) {
    if (c[k] <= 0) {
      out.truncation = TruncatedSeries::Truncation::ByBracket;
      return out;
    }
    out.coeffs.push_back(c[k]);
  }
  out.truncation = TruncatedSeries::Truncation::ByPrecision;
  return out;
}

DegreeOfRegularity degree_of_regularity(
    std::uint32_t n, const std::vector<std::uint32_t>& degrees,
    std::uint32_t bound) {
  auto s = semiregular_series(n, degrees, bound);
  DegreeOfRegularity d;
  d.bound = bound;
  if (s.truncation == TruncatedSeries::Truncation::ByBracket)
    d.value = static_cast<std::uint32_t>(s.size());
  return d;
}

TruncatedSeries homogenized_prefix(std::uint32_t n,
                                   const std::vector<std::uint32_t>& degrees) {
  // The bracket fires no later than deg(prod (1-z^{d_i})) + 1 when the
  // quotient is Artinian, so this bound is decisive.
  std::uint32_t bound =
      std::accumulate(degrees.begin(), degrees.end(), 0u) + 2;
  auto dreg = degree_of_regularity(n, degrees, bound);
  if (!dreg.finite())
    throw NotArtinian("degree of regularity is infinite; no prefix length");
  const std::uint32_t D = *dreg.value;
  auto c = series_prefix(n + 1, degrees, D == 0 ? 0 : D - 1);
  TruncatedSeries out;
  out.truncation = TruncatedSeries::Truncation::ByPrecision;
  for (std::uint32_t k = 0; k < D; ++k) out.coeffs.push_back(c[k]);
  return out;
}

std::size_t hf_from_staircase(const std::vector<Monomial>& lms,
                              std::size_t nvars, std::uint32_t d) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool standard = true;
    for (const auto& lm : lms) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

HilbertData hilbert_data(std::uint32_t n,
                         const std::vector<std::uint32_t>& degrees,
                         std::uint32_t precision) {
  HilbertData h;
  h.n = n;
  h.degrees = degrees;
  h.hs_top = semiregular_series(n, degrees, precision);
  h.d_reg = degree_of_regularity(n, degrees, precision);
  if (h.d_reg.finite()) h.hs_hom_prefix = homogenized_prefix(n, degrees);
  return h;
}

}  // namespace semigb
