#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semigb/gf.hpp"
#include "test_util.hpp"

using namespace semigb;

TEST_CASE("field construction rejects non-primes") {
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(73));
  CHECK_NOTHROW(FieldSpec(65521));
  CHECK_THROWS_AS(FieldSpec(1), Error);
  CHECK_THROWS_AS(FieldSpec(4), Error);
  CHECK_THROWS_AS(FieldSpec(91), Error);  // 7 * 13
}

TEST_CASE("addition") {
  FieldSpec f73(73);
  CHECK(add(FieldElem(40, f73), FieldElem(40, f73)).value == 7);
  CHECK(add(FieldElem(0, f73), FieldElem(5, f73)).value == 5);
  FieldSpec f2(2);
  CHECK(add(FieldElem(1, f2), FieldElem(1, f2)).value == 0);
  CHECK_THROWS_AS(add(FieldElem(1, f2), FieldElem(1, f73)), ModulusMismatch);
}

TEST_CASE("multiplication") {
  FieldSpec f73(73);
  CHECK(testutil::euclid_inverse(2, 73) == 37);
  CHECK(mul(FieldElem(2, f73), FieldElem(37, f73)).value == 1);
  CHECK(mul(FieldElem(1, f73), FieldElem(9, f73)).value == 9);
  CHECK(mul(FieldElem(0, f73), FieldElem(68, f73)).value == 0);
  FieldSpec f2(2);
  CHECK_THROWS_AS(mul(FieldElem(1, f2), FieldElem(1, f73)), ModulusMismatch);
}

TEST_CASE("inverse") {
  FieldSpec f73(73);
  CHECK(inv(FieldElem(1, f73)).value == 1);
  CHECK(inv(FieldElem(2, f73)).value == 37);
  CHECK(inv(FieldElem(72, f73)).value == 72);
  CHECK_THROWS_AS(inv(FieldElem(0, f73)), DivisionByZero);
}

TEST_CASE("inverses match extended Euclid and multiply to one") {
  for (std::uint32_t p : {2u, 3u, 73u, 65521u}) {
    std::mt19937_64 rng(p);
    for (int i = 0; i < 2000; ++i) {
      std::uint32_t a = 1 + rng() % (p - 1);
      std::uint32_t b = gf::inv(a, p);
      CHECK(b == testutil::euclid_inverse(a, p));
      CHECK(gf::mul(a, b, p) == 1);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  for (std::uint32_t p : {2u, 3u, 73u, 65521u}) {
    std::mt19937_64 rng(p * 7 + 1);
    for (int i = 0; i < 10000; ++i) {
      std::uint32_t a = rng() % p, b = rng() % p, c = rng() % p;
      CHECK(gf::add(gf::add(a, b, p), c, p) == gf::add(a, gf::add(b, c, p), p));
      CHECK(gf::mul(gf::mul(a, b, p), c, p) == gf::mul(a, gf::mul(b, c, p), p));
      CHECK(gf::mul(a, gf::add(b, c, p), p) ==
            gf::add(gf::mul(a, b, p), gf::mul(a, c, p), p));
      CHECK(gf::add(a, b, p) == gf::add(b, a, p));
      CHECK(gf::mul(a, b, p) == gf::mul(b, a, p));
      CHECK(gf::sub(gf::add(a, b, p), b, p) == a);
    }
  }
}
