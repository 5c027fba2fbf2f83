#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semigb/buchberger.hpp"
#include "semigb/polynomial.hpp"

namespace semigb {

struct InstanceSpec {
  std::uint32_t p = 73;
  std::uint32_t n = 3;
  std::vector<std::uint32_t> degrees;  // d_1..d_m
  std::uint64_t seed = 0;
  bool require_semiregular = true;

  std::size_t m() const { return degrees.size(); }
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool applicable = true;  // false: hypothesis absent, check skipped
  std::vector<std::string> witnesses;
};

struct BoundsData {
  std::uint32_t D = 0;
  std::uint32_t two_D_minus_2 = 0;
  std::uint32_t macaulay_bound = 0;
  std::uint32_t max_gb_deg_affine = 0;
  std::uint32_t max_gb_deg_hom = 0;
  std::optional<std::uint32_t> sd_hsd_seeded;  // H-seeded latter process
  std::uint32_t sd_hsd_plain = 0;              // informational only
  std::optional<std::uint32_t> sd_mac_affine;
  std::optional<std::uint32_t> sd_mac_hom;
};

struct VerifyReport {
  InstanceSpec spec;
  std::optional<std::string> golden;  // set when driven by a golden file
  std::uint32_t D = 0;
  std::vector<CheckResult> checks;
  std::optional<BoundsData> bounds;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.applicable && !c.pass) return false;
    return true;
  }
};

// Dense random affine polynomials of the given degrees (every monomial of
// degree <= d_i gets a uniform coefficient, top part nonzero), deterministic
// in the seed. With require_semiregular, rejection-samples until
// check_crypto_semiregular(F^top) passes (at most 50 attempts).
PolySequence random_affine_sequence(const InstanceSpec& spec);

// HF_{R'/<F^h>}(d) = HF_{R/<F^top>}(d) + HF_{R'/<F^h>}(d-1) for d < D,
// the cumulative form, and the mod-z^D congruence with the closed series.
CheckResult verify_hf_recursion(const PolySequence& F);

// LM(G_hom)_d = LM(G_top)_d for d < D, and every G_hom element with a
// y-divisible leading monomial has degree >= D.
CheckResult verify_lm_coincidence(const PolySequence& F);

// Every degree-D monomial in X is divisible by some LM((G_hom)_{<=D}), and
// each g in (G_hom)_D with nonzero top part has a single-term top part.
CheckResult verify_degD_structure(const PolySequence& F);

// max.GB.deg(F) <= D, H-seeded sd^hsd <= 2D-2, max.GB.deg(F^h) <= Macaulay
// bound, max.GB.deg(F) <= sd_mac(F) = sd_mac(F^h).
std::pair<CheckResult, BoundsData> verify_bounds(const PolySequence& F);

struct QuadraticRow {
  std::uint32_t n = 0;
  std::uint32_t D = 0;
  std::uint32_t two_D_minus_2 = 0;
  bool matches_closed_form = false;
};

// m = n+1 quadrics: D = floor((n+1)/2) + 1 and 2D-2 = n+1 (n odd) / n.
std::vector<QuadraticRow> verify_quadratic_dreg_table(std::uint32_t n_lo,
                                                      std::uint32_t n_hi);

enum class VerifyCheck : unsigned {
  HfRecursion = 1,
  LmCoincidence = 2,
  DegDStructure = 4,
  Bounds = 8,
  All = 15,
};

VerifyReport verify_instance(const InstanceSpec& spec,
                             unsigned checks = static_cast<unsigned>(
                                 VerifyCheck::All));

// Golden-file verification: loads the recorded instance, recomputes
// everything and compares bit-for-bit against the stored constants.
VerifyReport verify_golden(const std::string& path);

}  // namespace semigb
