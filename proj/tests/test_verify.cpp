#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigb/report_json.hpp"
#include "semigb/sysfile.hpp"
#include "semigb/verify.hpp"
#include "test_util.hpp"

using namespace semigb;

namespace {
PolySequence paper_F() { return parse_system(testutil::paper_system_text()).system; }

InstanceSpec quad_spec(std::uint64_t seed) {
  InstanceSpec s;
  s.p = 73;
  s.n = 3;
  s.degrees = {2, 2, 2, 2};
  s.seed = seed;
  s.require_semiregular = true;
  return s;
}
}  // namespace

TEST_CASE("random generation is deterministic in the seed") {
  auto F1 = random_affine_sequence(quad_spec(7));
  auto F2 = random_affine_sequence(quad_spec(7));
  REQUIRE(F1.size() == F2.size());
  for (std::size_t i = 0; i < F1.size(); ++i)
    CHECK(F1.polys[i] == F2.polys[i]);
  auto F3 = random_affine_sequence(quad_spec(8));
  bool all_equal = true;
  for (std::size_t i = 0; i < F1.size(); ++i)
    all_equal = all_equal && F1.polys[i] == F3.polys[i];
  CHECK(!all_equal);
}

TEST_CASE("generated instances are certified with the expected D") {
  auto F = random_affine_sequence(quad_spec(7));
  auto cs = check_crypto_semiregular(top_part(F));
  CHECK(cs.semiregular);
  CHECK(cs.D == 3);  // shape (n=3, four quadrics)
  for (const auto& f : F.polys) {
    CHECK(f.degree() == 2);
    CHECK(!top_part(f).is_zero());
  }
}

TEST_CASE("m < n with the semi-regularity requirement cannot be Artinian") {
  InstanceSpec s;
  s.p = 73;
  s.n = 3;
  s.degrees = {2, 2};
  s.seed = 1;
  s.require_semiregular = true;
  CHECK_THROWS_AS(random_affine_sequence(s), NotArtinianWithinCap);
}

TEST_CASE("hf recursion on the paper example") {
  auto res = verify_hf_recursion(paper_F());
  CHECK(res.pass);
  REQUIRE(res.witnesses.size() == 3);  // d = 0, 1, 2
  CHECK(res.witnesses[2].find("HF_hom=6") != std::string::npos);
  CHECK(res.witnesses[2].find("HF_top=2") != std::string::npos);
  CHECK(res.witnesses[2].find("HF_hom(d-1)=4") != std::string::npos);
}

TEST_CASE("precondition failures are reported as such") {
  const FieldSpec f73(73);
  RingCtx R3(f73, 3);
  PolySequence bad({parse_polynomial("x1^2 + 1", R3),
                    parse_polynomial("x1^2 + x2", R3)});
  CHECK_THROWS_AS(verify_hf_recursion(bad), PreconditionUnverified);
}

TEST_CASE("lm coincidence on the paper example") {
  auto res = verify_lm_coincidence(paper_F());
  CHECK(res.pass);
  // degree-2 sets listed, degrees 0 and 1 empty
  CHECK(res.witnesses[0].find("{}") != std::string::npos);
  CHECK(res.witnesses[2].find("x1^2") != std::string::npos);
}

TEST_CASE("degree-D structure on the paper example") {
  auto res = verify_degD_structure(paper_F());
  CHECK(res.pass);
  bool coverage_line = false;
  for (const auto& w : res.witnesses)
    coverage_line = coverage_line || w.find("covered 10/10") != std::string::npos;
  CHECK(coverage_line);
}

TEST_CASE("bounds on the paper example") {
  auto [res, data] = verify_bounds(paper_F());
  CHECK(res.pass);
  CHECK(data.D == 3);
  CHECK(data.two_D_minus_2 == 4);
  CHECK(data.macaulay_bound == 5);
  CHECK(data.max_gb_deg_affine == 1);
  CHECK(data.max_gb_deg_hom == 4);
  REQUIRE(data.sd_hsd_seeded.has_value());
  CHECK(*data.sd_hsd_seeded <= 4);
  REQUIRE(data.sd_mac_affine.has_value());
  CHECK(*data.sd_mac_affine == 4);
  CHECK(*data.sd_mac_hom == 4);
}

TEST_CASE("quadratic d_reg table n = 2..10") {
  auto rows = verify_quadratic_dreg_table(2, 10);
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    CHECK(r.matches_closed_form);
    CHECK(r.D == (r.n + 1) / 2 + 1);
  }
  CHECK(rows[1].n == 3);
  CHECK(rows[1].D == 3);
  CHECK(rows[1].two_D_minus_2 == 4);
  CHECK(rows[2].n == 4);
  CHECK(rows[2].D == 3);
  CHECK(rows[2].two_D_minus_2 == 4);  // = n for even n
}

TEST_CASE("verify_instance produces a reproducible full report") {
  auto rep1 = verify_instance(quad_spec(7));
  auto rep2 = verify_instance(quad_spec(7));
  CHECK(rep1.all_pass());
  CHECK(rep1.D == 3);
  REQUIRE(rep1.checks.size() == 4);
  REQUIRE(rep2.checks.size() == 4);
  for (std::size_t i = 0; i < rep1.checks.size(); ++i) {
    CHECK(rep1.checks[i].pass == rep2.checks[i].pass);
    CHECK(rep1.checks[i].witnesses == rep2.checks[i].witnesses);
  }
}

TEST_CASE("golden file verifies bit for bit") {
  auto rep = verify_golden(SEMIGB_SOURCE_DIR "/data/paper_example.json");
  for (const auto& c : rep.checks) {
    INFO(c.name);
    for (const auto& w : c.witnesses) INFO(w);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("verify report JSON shape") {
  auto rep = verify_instance(quad_spec(7));
  auto j = verify_json(rep);
  CHECK(j["all_pass"].get<bool>());
  CHECK(j["spec"]["p"].get<std::uint32_t>() == 73);
  CHECK(j["checks"].size() == 4);
  CHECK(j["bounds"]["macaulay_bound"].get<std::uint32_t>() == 5);
}
