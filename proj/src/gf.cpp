#include "semigb/gf.hpp"

namespace semigb {
namespace gf {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p;
  std::uint64_t acc = 1 % p;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace gf

FieldSpec::FieldSpec(std::uint32_t modulus) : p(modulus) {
  if (modulus < 2 || modulus >= (1u << 31) || !gf::is_prime(modulus))
    throw Error("modulus must be prime (2 <= p < 2^31), got " +
                std::to_string(modulus));
}

static void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.spec.p != b.spec.p)
    throw ModulusMismatch("field elements with moduli " +
                          std::to_string(a.spec.p) + " and " +
                          std::to_string(b.spec.p));
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return {gf::add(a.value, b.value, a.spec.p), a.spec};
}

FieldElem sub(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return {gf::sub(a.value, b.value, a.spec.p), a.spec};
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return {gf::mul(a.value, b.value, a.spec.p), a.spec};
}

FieldElem inv(const FieldElem& a) {
  return {gf::inv(a.value, a.spec.p), a.spec};
}

}  // namespace semigb
