#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semigb/polynomial.hpp"

namespace semigb::testutil {

// Independent inverse oracle: extended Euclid, unlike gf::inv's Fermat pow.
inline std::uint32_t euclid_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars,
                                std::uint32_t max_exp) {
  std::vector<std::uint32_t> e(nvars);
  for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingCtx& ctx,
                                    std::uint32_t max_deg,
                                    std::size_t max_terms) {
  std::vector<Term> terms;
  std::size_t nterms = 1 + rng() % max_terms;
  for (std::size_t i = 0; i < nterms; ++i) {
    Monomial m = random_monomial(rng, ctx.total_vars(), max_deg);
    std::uint32_t c = static_cast<std::uint32_t>(rng() % ctx.field.p);
    terms.push_back({c, std::move(m)});
  }
  return Polynomial(ctx, std::move(terms));
}

// Parses "2 0 1" style exponent rows for terse monomial literals.
inline Monomial mono(const std::vector<std::uint32_t>& e) {
  return Monomial(e);
}

// The p=73 four-quadrics system used as the running worked example.
inline const char* paper_system_text() {
  return "p=73 n=3\n"
         "x1^2 + 3*x2*x1 - 2*x3*x1 - x1 + x2^2 - 2*x3*x2 - 2*x2 + x3^2 + x3\n"
         "4*x1^2 + 3*x2*x1 + 4*x3*x1 - 2*x1 - x2 + x3^2 + 2*x3\n"
         "3*x1^2 - x1 + 9*x2^2 - 6*x3*x2 + x2 + x3^2 - x3\n"
         "x1^2 - 6*x2*x1 + 2*x3*x1 - 2*x1 + 9*x2^2 - 6*x3*x2 + x2 + 2*x3^2\n";
}

}  // namespace semigb::testutil
