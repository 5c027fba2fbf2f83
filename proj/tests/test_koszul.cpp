#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semigb/koszul.hpp"
#include "semigb/series.hpp"
#include "semigb/sysfile.hpp"
#include "test_util.hpp"

using namespace semigb;

namespace {
const FieldSpec f73(73);
const RingCtx R2(f73, 2);
const RingCtx R3(f73, 3);

Polynomial P(const std::string& s, const RingCtx& ctx) {
  return parse_polynomial(s, ctx);
}

PolySequence paper_top() {
  return top_part(parse_system(testutil::paper_system_text()).system);
}
}  // namespace

TEST_CASE("H1 of a regular sequence vanishes") {
  PolySequence F({P("x1", R2), P("x2", R2)});
  for (std::uint32_t d = 1; d <= 6; ++d) CHECK(h1_dimension(F, d) == 0);
}

TEST_CASE("H1 of the paper top part vanishes below D = 3") {
  PolySequence F = paper_top();
  CHECK(h1_dimension(F, 1) == 0);
  CHECK(h1_dimension(F, 2) == 0);
  CHECK(h1_dimension(F, 3) > 0);  // a degree fall occurs at D
}

TEST_CASE("H1 of (x1^2, x1^2) sees the nontrivial syzygy at degree 2") {
  PolySequence F({P("x1^2", R2), P("x1^2", R2)});
  // e_1 - e_2 is a syzygy in module degree 2; the trivial generator
  // t_{12} = f_1 e_2 - f_2 e_1 only starts at degree 4
  CHECK(h1_dimension(F, 2) == 1);
  CHECK_THROWS_AS(h1_dimension(PolySequence({P("x1 + 1", R2)}), 2),
                  NotHomogeneous);
}

TEST_CASE("phi_m is injective in every degree") {
  std::vector<PolySequence> cases = {
      paper_top(),
      PolySequence({P("x1^2", R2), P("x1^2", R2)}),
      PolySequence({P("x1^2 + x2^2", R2), P("x1*x2", R2), P("x2^3", R2)})};
  for (const auto& F : cases) {
    for (std::uint32_t d = 1; d <= 8; ++d) {
      auto pm = phim_matrix(F, d);
      CHECK(rank(pm.matrix) == pm.matrix.cols());
    }
  }
}

TEST_CASE("three d-regularity routes agree") {
  PolySequence F = paper_top();
  for (auto m : {DRegMethod::Direct, DRegMethod::Series, DRegMethod::Homology})
    CHECK(check_d_regular(F, 3, m));

  PolySequence bad({P("x1^2", R2), P("x1^2", R2)});
  for (auto m : {DRegMethod::Direct, DRegMethod::Series, DRegMethod::Homology})
    CHECK(!check_d_regular(bad, 3, m));

  PolySequence reg({P("x1^2", R3), P("x2^2", R3), P("x3^2", R3)});
  for (auto m : {DRegMethod::Direct, DRegMethod::Series, DRegMethod::Homology})
    CHECK(check_d_regular(reg, 10, m));
}

TEST_CASE("crypto semi-regularity with actual degree of regularity") {
  auto cs = check_crypto_semiregular(paper_top());
  CHECK(cs.semiregular);
  CHECK(cs.D == 3);

  PolySequence small({P("x1^2", R2), P("x1*x2", R2), P("x2^2", R2)});
  auto cs2 = check_crypto_semiregular(small);
  CHECK(cs2.semiregular);
  CHECK(cs2.D == 2);

  PolySequence open({P("x1^2", R3), P("x2^2", R3)});
  CHECK_THROWS_AS(check_crypto_semiregular(open), NotArtinianWithinCap);
}

TEST_CASE("pardue semi-regularity") {
  RingCtx R1(f73, 1);
  CHECK(check_pardue_semiregular(PolySequence({P("x1", R1)})));
  CHECK(!check_pardue_semiregular(
      PolySequence({P("x1^2", R2), P("x1^2", R2)})));
  // non-Artinian early prefixes leave the scan undecided at the cap
  CHECK_THROWS_AS(check_pardue_semiregular(paper_top()), CapExceeded);
}

TEST_CASE("pardue implies cryptographic when decided") {
  // full-length regular sequence in one variable chain
  RingCtx R1(f73, 1);
  PolySequence F({P("x1", R1)});
  bool pardue = check_pardue_semiregular(F);
  REQUIRE(pardue);
  auto cs = check_crypto_semiregular(F);
  CHECK(cs.semiregular);
}

TEST_CASE("dimension lemma accounting on random small instances") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 20) {
    std::vector<Polynomial> polys;
    std::size_t m = 2 + rng() % 2;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Term> terms;
      std::uint32_t d = 1 + rng() % 2;
      for (auto& mo : monomials_of_degree(2, d)) {
        std::uint32_t c = static_cast<std::uint32_t>(rng() % 73);
        if (c) terms.push_back({c, mo});
      }
      Polynomial f(R2, std::move(terms));
      if (f.is_zero()) {
        k--;
        continue;
      }
      polys.push_back(f);
    }
    PolySequence F(polys);
    auto degs = F.degrees();
    // dim A^(i)_t = dim A^(i-1)_t - dim A^(i-1)_{t-d_i} + dim (0:f_i)_{t-d_i}
    for (std::size_t i = 1; i <= F.size(); ++i) {
      std::vector<Polynomial> prefix(F.polys.begin(), F.polys.begin() + i - 1);
      std::vector<Polynomial> prefix_gb;
      if (!prefix.empty()) prefix_gb = buchberger(PolySequence(prefix)).elements;
      std::vector<Polynomial> cur(F.polys.begin(), F.polys.begin() + i);
      auto cur_lms = buchberger(PolySequence(cur)).leading_monomials();
      std::vector<Monomial> prev_lms;
      for (const auto& g : prefix_gb) prev_lms.push_back(g.lm());
      for (std::uint32_t t = degs[i - 1]; t <= degs[i - 1] + 3; ++t) {
        std::size_t lhs = hf_from_staircase(cur_lms, 2, t);
        std::size_t a_t = hf_from_staircase(prev_lms, 2, t);
        std::size_t a_shift = hf_from_staircase(prev_lms, 2, t - degs[i - 1]);
        MatrixGF mult = multiplication_matrix(F.polys[i - 1], prefix_gb, t);
        std::size_t ann = kernel_dim(mult);  // dim (0 : f_i)_{t - d_i}
        CHECK(lhs == a_t - a_shift + ann);
      }
    }
    ++done;
  }
}

TEST_CASE("first fall degree") {
  FieldSpec f2(2);
  RingCtx B2(f2, 2);
  PolySequence F({P("x1*x2", B2)});
  CHECK(first_fall_degree(F, 2) == 3);

  // no fall for a plain regular linear element within the cap
  FieldSpec f3(3);
  RingCtx B1(f3, 1);
  CHECK_THROWS_AS(first_fall_degree(PolySequence({P("x1", B1)}), 3),
                  NoFallWithinCap);

  CHECK_THROWS_AS(first_fall_degree(F, 3), Error);  // q must equal p
}

TEST_CASE("prefix vanishing") {
  PolySequence F = paper_top();
  CHECK(prefix_vanishing_check(F, 2));
  CHECK_THROWS_AS(prefix_vanishing_check(F, 3), PreconditionUnverified);

  // single element: H1 identically zero (R is a domain)
  PolySequence single({P("x1^2 + x2^2", R2)});
  for (std::uint32_t d = 1; d <= 8; ++d) CHECK(h1_dimension(single, d) == 0);
}

TEST_CASE("caps are enforced") {
  PolySequence F = paper_top();
  CHECK_THROWS_AS(h1_dimension(F, 13), CapExceeded);
}

TEST_CASE("koszul report") {
  auto rep = koszul_report(paper_top(), 4);
  CHECK(rep.is_crypto_semiregular);
  REQUIRE(rep.d_reg_actual.has_value());
  CHECK(*rep.d_reg_actual == 3);
  CHECK(rep.d_regular_up_to == 3);
  CHECK(rep.h1_dims[0] == 0);
  CHECK(rep.h1_dims[1] == 0);
  CHECK(rep.h1_dims[2] > 0);
  CHECK(!rep.is_pardue_semiregular.has_value());  // cap exceeded
}
