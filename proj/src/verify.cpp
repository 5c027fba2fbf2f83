#include "semigb/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "semigb/errors.hpp"
#include "semigb/f5.hpp"
#include "semigb/koszul.hpp"
#include "semigb/series.hpp"
#include "semigb/sysfile.hpp"

namespace semigb {

namespace {

void check_spec(const InstanceSpec& spec) {
  if (spec.degrees.empty()) throw Error("instance needs m >= 1 generators");
  for (auto d : spec.degrees)
    if (d == 0) throw InvalidDegree("generator degrees must be positive");
  if (spec.n < 1 || spec.n > KoszulCaps::max_vars)
    throw CapExceeded("instance variable count outside 1.." +
                      std::to_string(KoszulCaps::max_vars));
  if (spec.m() > KoszulCaps::max_generators)
    throw CapExceeded("instance generator count exceeds cap");
}

Polynomial random_dense_poly(std::mt19937_64& rng, const RingCtx& ctx,
                             std::uint32_t d) {
  for (;;) {
    std::vector<Term> terms;
    bool top_nonzero = false;
    for (auto& m : monomials_up_to_degree(ctx.total_vars(), d)) {
      std::uint32_t c = static_cast<std::uint32_t>(rng() % ctx.field.p);
      if (c == 0) continue;
      if (m.degree() == d) top_nonzero = true;
      terms.push_back({c, std::move(m)});
    }
    if (top_nonzero) return Polynomial(ctx, std::move(terms));
  }
}

// Certification shared by the verify_* checks: D = d_reg(<F^top>) with
// F^top cryptographic semi-regular.
std::uint32_t certify(const PolySequence& F) {
  try {
    auto cs = check_crypto_semiregular(top_part(F));
    if (!cs.semiregular)
      throw PreconditionUnverified(
          "top part is not cryptographic semi-regular");
    return cs.D;
  } catch (const NotArtinianWithinCap& e) {
    throw PreconditionUnverified(std::string("top part not Artinian: ") +
                                 e.what());
  }
}

std::string mono_str(const Monomial& m, const RingCtx& ctx) {
  return to_string(m, ctx);
}

}  // namespace

PolySequence random_affine_sequence(const InstanceSpec& spec) {
  check_spec(spec);
  FieldSpec field(spec.p);
  RingCtx ctx(field, spec.n, false);
  std::mt19937_64 rng(spec.seed);
  const int max_attempts = 50;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Polynomial> polys;
    polys.reserve(spec.m());
    for (auto d : spec.degrees) polys.push_back(random_dense_poly(rng, ctx, d));
    PolySequence F(std::move(polys));
    if (!spec.require_semiregular) return F;
    try {
      auto cs = check_crypto_semiregular(top_part(F));
      if (cs.semiregular) return F;
    } catch (const NotArtinianWithinCap&) {
      if (spec.m() < spec.n) throw;  // structurally never Artinian
    }
  }
  throw GenerationFailed("no cryptographic semi-regular instance in " +
                         std::to_string(max_attempts) + " attempts (seed " +
                         std::to_string(spec.seed) + ")");
}

CheckResult verify_hf_recursion(const PolySequence& F) {
  CheckResult res{"hf_recursion", true, true, {}};
  const std::uint32_t D = certify(F);
  const RingCtx& ctx = F.ctx();
  PolySequence Ftop = top_part(F);
  PolySequence Fh = homogenize(F);
  auto lm_top = buchberger(Ftop).leading_monomials();
  auto lm_hom = buchberger(Fh).leading_monomials();
  auto prefix = homogenized_prefix(ctx.nvars, F.degrees());

  std::size_t cum = 0;
  std::size_t lhs_prev = 0;
  for (std::uint32_t d = 0; d < D; ++d) {
    std::size_t lhs = hf_from_staircase(lm_hom, ctx.nvars + 1, d);
    std::size_t rhs_top = hf_from_staircase(lm_top, ctx.nvars, d);
    cum += rhs_top;
    bool ok_rec = lhs == rhs_top + lhs_prev;
    bool ok_cum = lhs == cum;
    bool ok_series = prefix.coeffs[d] == static_cast<long>(lhs);
    std::ostringstream w;
    w << "d=" << d << ": HF_hom=" << lhs << " HF_top=" << rhs_top
      << " HF_hom(d-1)=" << lhs_prev << " series=" << prefix.coeffs[d]
      << (ok_rec && ok_cum && ok_series ? "" : "  <-- MISMATCH");
    res.witnesses.push_back(w.str());
    if (!(ok_rec && ok_cum && ok_series)) res.pass = false;
    lhs_prev = lhs;
  }
  return res;
}

CheckResult verify_lm_coincidence(const PolySequence& F) {
  CheckResult res{"lm_coincidence", true, true, {}};
  const std::uint32_t D = certify(F);
  const RingCtx& ctx = F.ctx();
  GroebnerBasis G_top = buchberger(top_part(F));
  GroebnerBasis G_hom = buchberger(homogenize(F));
  const RingCtx hctx = ctx.homogenized();

  for (std::uint32_t d = 0; d < D; ++d) {
    // compare as monomial sets in X: embed G_top LMs with y-exponent 0
    std::vector<Monomial> top_d, hom_d;
    for (const auto& g : G_top.elements) {
      if (g.degree() != d) continue;
      auto e = g.lm().exponents();
      e.push_back(0);
      top_d.emplace_back(std::move(e));
    }
    for (const auto& g : G_hom.elements)
      if (g.degree() == d) hom_d.push_back(g.lm());
    auto less = [](const Monomial& a, const Monomial& b) {
      return drl_less(a, b);
    };
    std::sort(top_d.begin(), top_d.end(), less);
    std::sort(hom_d.begin(), hom_d.end(), less);
    bool equal = top_d == hom_d;
    std::ostringstream w;
    w << "d=" << d << ": LM(G_top)_d={";
    for (const auto& m : top_d) w << mono_str(m, hctx) << " ";
    w << "} LM(G_hom)_d={";
    for (const auto& m : hom_d) w << mono_str(m, hctx) << " ";
    w << "}" << (equal ? "" : "  <-- MISMATCH");
    res.witnesses.push_back(w.str());
    if (!equal) res.pass = false;
  }

  const std::size_t ypos = ctx.nvars;
  for (const auto& g : G_hom.elements) {
    if (g.lm()[ypos] > 0 && g.degree() < D) {
      res.pass = false;
      res.witnesses.push_back("y-divisible LM " + mono_str(g.lm(), hctx) +
                              " at degree " + std::to_string(g.degree()) +
                              " < D  <-- MISMATCH");
    }
  }
  return res;
}

CheckResult verify_degD_structure(const PolySequence& F) {
  CheckResult res{"degD_structure", true, true, {}};
  const std::uint32_t D = certify(F);
  const RingCtx& ctx = F.ctx();
  const RingCtx hctx = ctx.homogenized();
  GroebnerBasis G_hom = buchberger(homogenize(F));

  std::vector<Monomial> lms_leD;
  for (const auto& g : G_hom.elements)
    if (g.degree() <= D) lms_leD.push_back(g.lm());

  // every degree-D monomial in X (y-exponent 0) is covered
  std::size_t covered = 0, total = 0;
  for (const auto& mx : monomials_of_degree(ctx.nvars, D)) {
    ++total;
    auto e = mx.exponents();
    e.push_back(0);
    Monomial m(std::move(e));
    bool hit = false;
    for (const auto& lm : lms_leD)
      if (lm.divides(m)) {
        hit = true;
        break;
      }
    if (hit) {
      ++covered;
    } else {
      res.pass = false;
      res.witnesses.push_back("degree-D monomial " + mono_str(m, hctx) +
                              " not covered  <-- MISMATCH");
    }
  }
  res.witnesses.push_back("covered " + std::to_string(covered) + "/" +
                          std::to_string(total) + " degree-" +
                          std::to_string(D) + " monomials in X");

  // single-term top parts in (G_hom)_D
  for (const auto& g : G_hom.elements) {
    if (g.degree() != D) continue;
    Polynomial t = top_part(g);
    if (t.is_zero()) continue;
    bool single = t.size() == 1 && t.lt().coeff == g.lt().coeff &&
                  t.lm() == g.lm();
    std::ostringstream w;
    w << "g with LM " << mono_str(g.lm(), hctx) << ": top part has "
      << t.size() << " term(s)" << (single ? "" : "  <-- MISMATCH");
    res.witnesses.push_back(w.str());
    if (!single) res.pass = false;
  }
  return res;
}

std::pair<CheckResult, BoundsData> verify_bounds(const PolySequence& F) {
  CheckResult res{"bounds", true, true, {}};
  BoundsData b;
  b.D = certify(F);
  b.two_D_minus_2 = 2 * b.D - 2;
  const RingCtx& ctx = F.ctx();
  auto degs = F.degrees();
  const std::uint32_t maxd = *std::max_element(degs.begin(), degs.end());

  std::vector<std::uint32_t> sorted = degs;
  std::sort(sorted.rbegin(), sorted.rend());
  std::size_t ell = std::min<std::size_t>(degs.size(), ctx.nvars + 1);
  b.macaulay_bound = 1;
  for (std::size_t i = 0; i < ell; ++i) b.macaulay_bound += sorted[i] - 1;

  GroebnerBasis G = buchberger(F);
  b.max_gb_deg_affine = G.max_degree();
  b.sd_hsd_plain = G.log.highest_step_degree;
  GroebnerBasis G_hom = buchberger(homogenize(F));
  b.max_gb_deg_hom = G_hom.max_degree();

  auto expect = [&](bool ok, const std::string& what) {
    res.witnesses.push_back(what + (ok ? "" : "  <-- VIOLATED"));
    if (!ok) res.pass = false;
  };

  expect(b.max_gb_deg_affine <= b.D,
         "max.GB.deg(F) = " + std::to_string(b.max_gb_deg_affine) +
             " <= D = " + std::to_string(b.D));

  // H-seeded latter process; the 2D-2 bound's hypothesis is D >= max deg f_i
  if (b.D >= maxd) {
    std::vector<Polynomial> H;
    for (const auto& g : G_hom.elements)
      if (g.degree() <= b.D) H.push_back(dehomogenize(g));
    GroebnerBasis latter = buchberger_from_basis(H);
    b.sd_hsd_seeded = latter.log.highest_step_degree;
    expect(*b.sd_hsd_seeded <= b.two_D_minus_2,
           "H-seeded sd^hsd = " + std::to_string(*b.sd_hsd_seeded) +
               " <= 2D-2 = " + std::to_string(b.two_D_minus_2));
    bool same = latter.elements.size() == G.elements.size();
    for (std::size_t i = 0; same && i < latter.elements.size(); ++i)
      same = latter.elements[i] == G.elements[i];
    expect(same, "H-seeded continuation reproduces the reduced GB of <F>");
  } else {
    res.witnesses.push_back("2D-2 check skipped: D < max generator degree");
  }

  expect(b.max_gb_deg_hom <= b.macaulay_bound,
         "max.GB.deg(F^h) = " + std::to_string(b.max_gb_deg_hom) +
             " <= Macaulay bound = " + std::to_string(b.macaulay_bound));

  MacaulayResult mac_aff = macaulay_gb(F, b.macaulay_bound);
  MacaulayResult mac_hom = macaulay_gb(homogenize(F), b.macaulay_bound);
  b.sd_mac_affine = mac_aff.sd_mac;
  b.sd_mac_hom = mac_hom.sd_mac;
  expect(mac_aff.reached() && mac_hom.reached(),
         "sd_mac reached within the Macaulay bound");
  if (mac_aff.reached() && mac_hom.reached()) {
    expect(*b.sd_mac_affine == *b.sd_mac_hom,
           "sd_mac(F) = " + std::to_string(*b.sd_mac_affine) +
               " equals sd_mac(F^h) = " + std::to_string(*b.sd_mac_hom));
    expect(b.max_gb_deg_affine <= *b.sd_mac_affine,
           "max.GB.deg(F) <= sd_mac(F)");
  }
  res.witnesses.push_back("informational: plain sd^hsd = " +
                          std::to_string(b.sd_hsd_plain));
  return {res, b};
}

std::vector<QuadraticRow> verify_quadratic_dreg_table(std::uint32_t n_lo,
                                                      std::uint32_t n_hi) {
  if (n_lo < 2) throw InvalidDegree("quadratic table starts at n >= 2");
  std::vector<QuadraticRow> rows;
  for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
    std::vector<std::uint32_t> degs(n + 1, 2);
    auto dreg = degree_of_regularity(n, degs, 2 * n + 4);
    QuadraticRow row;
    row.n = n;
    row.D = dreg.finite() ? *dreg.value : 0;
    row.two_D_minus_2 = 2 * row.D - 2;
    std::uint32_t closed = (n + 1) / 2 + 1;
    std::uint32_t parity = (n % 2 == 1) ? n + 1 : n;
    row.matches_closed_form =
        dreg.finite() && row.D == closed && row.two_D_minus_2 == parity;
    rows.push_back(row);
  }
  return rows;
}

VerifyReport verify_instance(const InstanceSpec& spec, unsigned checks) {
  VerifyReport rep;
  rep.spec = spec;
  PolySequence F = random_affine_sequence(spec);
  rep.D = certify(F);
  if (checks & static_cast<unsigned>(VerifyCheck::HfRecursion))
    rep.checks.push_back(verify_hf_recursion(F));
  if (checks & static_cast<unsigned>(VerifyCheck::LmCoincidence))
    rep.checks.push_back(verify_lm_coincidence(F));
  if (checks & static_cast<unsigned>(VerifyCheck::DegDStructure))
    rep.checks.push_back(verify_degD_structure(F));
  if (checks & static_cast<unsigned>(VerifyCheck::Bounds)) {
    auto [res, data] = verify_bounds(F);
    rep.checks.push_back(res);
    rep.bounds = data;
  }
  return rep;
}

VerifyReport verify_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open golden file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);

  VerifyReport rep;
  rep.golden = doc.value("name", path);
  InstanceSpec spec;
  spec.p = doc.at("p").get<std::uint32_t>();
  spec.n = doc.at("n").get<std::uint32_t>();
  spec.require_semiregular = false;

  FieldSpec field(spec.p);
  RingCtx ctx(field, spec.n, false);
  std::vector<Polynomial> polys;
  for (const auto& s : doc.at("system"))
    polys.push_back(parse_polynomial(s.get<std::string>(), ctx));
  PolySequence F(polys);
  for (const auto& f : polys) spec.degrees.push_back(f.degree());
  rep.spec = spec;

  const auto& exp = doc.at("expected");
  auto expect = [&](CheckResult& res, bool ok, const std::string& what) {
    res.witnesses.push_back(what + (ok ? "" : "  <-- MISMATCH"));
    if (!ok) res.pass = false;
  };

  PolySequence Ftop = top_part(F);
  PolySequence Fh = homogenize(F);
  GroebnerBasis G = buchberger(F);
  GroebnerBasis Gtop = buchberger(Ftop);
  GroebnerBasis Ghom = buchberger(Fh);
  auto cs = check_crypto_semiregular(Ftop);
  rep.D = cs.D;

  auto gb_equals = [&](const GroebnerBasis& g, const nlohmann::json& arr,
                       const RingCtx& rctx) {
    if (g.elements.size() != arr.size()) return false;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Polynomial want = parse_polynomial(arr[i].get<std::string>(), rctx);
      if (!(g.elements[i] == want)) return false;
    }
    return true;
  };
  auto lm_set_equals = [&](const GroebnerBasis& g, const nlohmann::json& arr,
                           const RingCtx& rctx) {
    std::vector<std::string> got;
    for (const auto& e : g.elements) got.push_back(to_string(e.lm(), rctx));
    std::vector<std::string> want;
    for (const auto& s : arr) want.push_back(s.get<std::string>());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
  };

  const RingCtx hctx = ctx.homogenized();
  CheckResult res{"golden", true, true, {}};
  expect(res, cs.semiregular, "F^top certified cryptographic semi-regular");
  expect(res, cs.D == exp.at("D").get<std::uint32_t>(),
         "D = " + std::to_string(cs.D));

  auto hs = semiregular_series(spec.n, F.degrees(), 2 * rep.D + 4);
  std::vector<long> hs_got;
  for (const auto& c : hs.coeffs) hs_got.push_back(static_cast<long>(c.get_si()));
  expect(res, hs_got == exp.at("hs_top").get<std::vector<long>>() &&
                  hs.truncation == TruncatedSeries::Truncation::ByBracket,
         "HS_top coefficients match (bracket truncation)");

  auto hp = homogenized_prefix(spec.n, F.degrees());
  std::vector<long> hp_got;
  for (const auto& c : hp.coeffs) hp_got.push_back(static_cast<long>(c.get_si()));
  expect(res, hp_got == exp.at("hs_hom_prefix").get<std::vector<long>>(),
         "HS_hom prefix matches");

  for (auto it = exp.at("hf_hom").begin(); it != exp.at("hf_hom").end(); ++it) {
    std::uint32_t d = static_cast<std::uint32_t>(std::stoul(it.key()));
    std::size_t want = it.value().get<std::size_t>();
    std::size_t got =
        hf_from_staircase(Ghom.leading_monomials(), spec.n + 1, d);
    expect(res, got == want,
           "HF_hom(" + it.key() + ") = " + std::to_string(got));
  }

  expect(res, gb_equals(G, exp.at("gb_affine"), ctx), "reduced GB of <F>");
  expect(res, gb_equals(Gtop, exp.at("gb_top"), ctx), "reduced GB of <F^top>");
  expect(res, gb_equals(Ghom, exp.at("gb_hom"), hctx), "reduced GB of <F^h>");
  expect(res, lm_set_equals(Gtop, exp.at("lm_top"), ctx), "LM set of G_top");
  expect(res, lm_set_equals(Ghom, exp.at("lm_hom"), hctx), "LM set of G_hom");

  GroebnerBasis deh = dehomogenize_gb(Ghom);
  bool deh_same = deh.elements.size() == G.elements.size();
  for (std::size_t i = 0; deh_same && i < deh.elements.size(); ++i)
    deh_same = deh.elements[i] == G.elements[i];
  expect(res, deh_same, "dehomogenized G_hom inter-reduces to G");

  if (exp.contains("max_gb_deg_hom"))
    expect(res, Ghom.max_degree() == exp.at("max_gb_deg_hom").get<std::uint32_t>(),
           "max.GB.deg(F^h) = " + std::to_string(Ghom.max_degree()));

  rep.checks.push_back(res);
  rep.checks.push_back(verify_hf_recursion(F));
  rep.checks.push_back(verify_lm_coincidence(F));
  rep.checks.push_back(verify_degD_structure(F));
  auto [bres, bdata] = verify_bounds(F);
  rep.checks.push_back(bres);
  rep.bounds = bdata;
  return rep;
}

}  // namespace semigb
