#pragma once

#include <cstdint>

#include "semigb/errors.hpp"

namespace semigb {
namespace gf {

// Raw modular arithmetic on canonical representatives in [0, p).
// Matrices and polynomials use these directly with a context-level modulus;
// FieldElem below is the checked per-element view.

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;  // p < 2^31, no overflow
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Multiplicative inverse via Fermat (p prime). Throws DivisionByZero on 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint32_t n);

}  // namespace gf

struct FieldSpec {
  std::uint32_t p = 0;

  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t modulus);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldElem {
  std::uint32_t value = 0;
  FieldSpec spec;

  FieldElem() = default;
  FieldElem(std::uint32_t v, FieldSpec s) : value(v % s.p), spec(s) {}

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem inv(const FieldElem& a);

}  // namespace semigb
