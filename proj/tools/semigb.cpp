// semigb: Groebner bases over prime fields, Hilbert series of semi-regular
// sequences, and executable checks of the structural results behind them.
//
// Subcommands: gb, hilbert, verify, estimate. Machine-first JSON output;
// --pretty renders aligned tables. Exit codes: 0 pass, 1 check failure,
// 2 precondition/cap, 3 parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "semigb/errors.hpp"
#include "semigb/f5.hpp"
#include "semigb/koszul.hpp"
#include "semigb/report_json.hpp"
#include "semigb/series.hpp"
#include "semigb/sysfile.hpp"
#include "semigb/verify.hpp"

using namespace semigb;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitParseError = 3;

std::uint32_t default_degree_cap() {
  if (const char* env = std::getenv("SEMIGB_DEGREE_CAP"))
    return static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
  return 24;
}

std::vector<std::uint32_t> parse_degree_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  return out;
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

void print_pretty_gb(const GroebnerBasis& gb) {
  std::cout << "reduced Groebner basis (" << gb.elements.size()
            << " elements):\n";
  for (const auto& g : gb.elements) std::cout << "  " << to_string(g) << "\n";
}

int run_gb(const std::string& path, const std::string& engine,
           bool homogenize_input, std::uint32_t dmax,
           std::optional<std::uint32_t> cap, bool pretty) {
  SystemFile sf = load_system(path);
  PolySequence F = sf.system;
  RingCtx ctx = sf.ctx();
  json out{{"input", path},
           {"p", sf.field.p},
           {"n", sf.n},
           {"engine", engine}};

  EngineOptions opts;
  opts.step_degree_cap = cap;
  auto t0 = std::chrono::steady_clock::now();

  auto run_one = [&](const PolySequence& sys, const RingCtx& rctx) {
    GroebnerBasis gb;
    if (engine == "buchberger") {
      gb = buchberger(sys, opts);
    } else if (engine == "f5") {
      gb = f5_gb(sys, opts);
    } else if (engine == "macaulay") {
      MacaulayResult mr = macaulay_gb(sys, dmax);
      if (!mr.reached())
        throw CapExceeded("macaulay engine did not reach a basis by degree " +
                          std::to_string(dmax));
      json sub = gb_json(mr.gb, rctx);
      sub["sd_mac"] = *mr.sd_mac;
      return std::pair<GroebnerBasis, json>(mr.gb, sub);
    } else {
      throw Error("unknown engine: " + engine);
    }
    json sub = gb_json(gb, rctx);
    sub["step_log"] = step_log_json(gb.log, rctx);
    return std::pair<GroebnerBasis, json>(gb, sub);
  };

  if (homogenize_input) {
    PolySequence Fh = homogenize(F);
    RingCtx hctx = ctx.homogenized();
    auto [gh, jh] = run_one(Fh, hctx);
    out["gb_hom"] = jh;
    GroebnerBasis deh = dehomogenize_gb(gh);
    out["gb"] = gb_json(deh, ctx);
    if (pretty) print_pretty_gb(deh);
  } else {
    auto [g, jg] = run_one(F, ctx);
    out["gb"] = jg;
    if (pretty) print_pretty_gb(g);
  }
  auto t1 = std::chrono::steady_clock::now();
  out["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  emit(out, pretty);
  return kExitPass;
}

int run_hilbert(std::uint32_t n, const std::vector<std::uint32_t>& degrees,
                std::uint32_t precision, bool pretty) {
  HilbertData h = hilbert_data(n, degrees, precision);
  json out = hilbert_json(h);
  if (pretty) {
    std::cout << "HS_top coefficients: ";
    for (const auto& c : h.hs_top.coeffs) std::cout << c.get_str() << " ";
    std::cout << "\nd_reg: "
              << (h.d_reg.finite() ? std::to_string(*h.d_reg.value)
                                   : std::string("infinite"))
              << "\n";
  }
  emit(out, pretty);
  return kExitPass;
}

int run_verify(const std::string& golden, std::uint32_t p, std::uint32_t n,
               const std::string& degrees, std::uint64_t seed,
               std::uint32_t count, std::uint32_t jobs,
               const std::string& checks, bool pretty) {
  unsigned mask = 0;
  {
    std::stringstream ss(checks);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "all")
        mask |= static_cast<unsigned>(VerifyCheck::All);
      else if (tok == "hf")
        mask |= static_cast<unsigned>(VerifyCheck::HfRecursion);
      else if (tok == "lm")
        mask |= static_cast<unsigned>(VerifyCheck::LmCoincidence);
      else if (tok == "degd")
        mask |= static_cast<unsigned>(VerifyCheck::DegDStructure);
      else if (tok == "bounds")
        mask |= static_cast<unsigned>(VerifyCheck::Bounds);
      else
        throw Error("unknown check name: " + tok);
    }
  }
  if (!golden.empty()) {
    VerifyReport rep = verify_golden(golden);
    emit(verify_json(rep), pretty);
    return rep.all_pass() ? kExitPass : kExitCheckFailure;
  }

  InstanceSpec base;
  base.p = p;
  base.n = n;
  base.degrees = parse_degree_list(degrees);
  base.require_semiregular = true;

  std::vector<InstanceSpec> specs;
  for (std::uint32_t k = 0; k < count; ++k) {
    InstanceSpec s = base;
    s.seed = seed + k;
    specs.push_back(s);
  }
  std::vector<VerifyReport> reports(specs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i)
      reports[i] = verify_instance(specs[i], mask);
  } else {
    std::vector<std::future<VerifyReport>> futs;
    futs.reserve(specs.size());
    for (const auto& s : specs)
      futs.push_back(std::async(std::launch::async,
                                [s, mask] { return verify_instance(s, mask); }));
    for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
  }
  json arr = json::array();
  bool all = true;
  for (const auto& r : reports) {
    arr.push_back(verify_json(r));
    all = all && r.all_pass();
  }
  emit(count == 1 ? arr[0] : json{{"reports", arr}, {"all_pass", all}},
       pretty);
  return all ? kExitPass : kExitCheckFailure;
}

int run_estimate(std::uint32_t n, const std::vector<std::uint32_t>& degrees,
                 double omega, bool pretty) {
  auto dreg = degree_of_regularity(
      n, degrees,
      std::accumulate(degrees.begin(), degrees.end(), 0u) + 2);
  if (!dreg.finite())
    throw NotArtinian("degree of regularity is infinite for this shape");
  std::uint32_t D = *dreg.value;
  std::vector<std::uint32_t> sorted = degrees;
  std::sort(sorted.rbegin(), sorted.rend());
  std::size_t ell = std::min<std::size_t>(degrees.size(), n + 1);
  std::uint32_t mac = 1;
  for (std::size_t i = 0; i < ell; ++i) mac += sorted[i] - 1;

  json costs = json::array();
  for (std::uint32_t d : {D, 2 * D - 2, mac}) {
    mpz_class N;
    mpz_bin_uiui(N.get_mpz_t(), n + d, n);
    costs.push_back({{"d", d},
                     {"N", N.get_str()},
                     {"cost", complexity_estimate(n, d, omega).get_str()}});
  }
  json out{{"n", n},
           {"m", degrees.size()},
           {"degrees", degrees},
           {"omega", omega},
           {"D", D},
           {"two_D_minus_2", 2 * D - 2},
           {"macaulay_bound", mac},
           {"costs", costs}};
  emit(out, pretty);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases and Hilbert series of semi-regular sequences"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  auto* gb = app.add_subcommand("gb", "compute a reduced Groebner basis");
  std::string gb_file, gb_engine = "buchberger";
  bool gb_hom = false;
  std::uint32_t gb_dmax = default_degree_cap();
  std::optional<std::uint32_t> gb_cap;
  std::uint32_t gb_cap_raw = 0;
  gb->add_option("file", gb_file, "system file")->required();
  gb->add_option("--engine", gb_engine, "buchberger | f5 | macaulay")
      ->check(CLI::IsMember({"buchberger", "f5", "macaulay"}));
  gb->add_flag("--homogenize", gb_hom,
               "run the F^h pipeline and report both bases");
  gb->add_option("--dmax", gb_dmax, "macaulay engine degree limit");
  auto* capopt = gb->add_option("--cap", gb_cap_raw, "step degree cap");

  auto* hil = app.add_subcommand("hilbert", "semi-regular Hilbert series");
  std::uint32_t hil_n = 0, hil_prec = 32;
  std::string hil_degs;
  hil->add_option("--n", hil_n, "variable count")->required();
  hil->add_option("--degrees", hil_degs, "comma-separated degree list")
      ->required();
  hil->add_option("--precision", hil_prec, "series precision bound");

  auto* ver = app.add_subcommand("verify", "run theorem checks");
  std::string ver_golden, ver_degs = "2,2,2,2", ver_checks = "all";
  std::uint32_t ver_p = 73, ver_n = 3, ver_count = 1, ver_jobs = 1;
  std::uint64_t ver_seed = 1;
  ver->add_option("--golden", ver_golden, "golden file path");
  ver->add_option("--p", ver_p, "prime modulus");
  ver->add_option("--n", ver_n, "variable count");
  ver->add_option("--degrees", ver_degs, "comma-separated degree list");
  ver->add_option("--seed", ver_seed, "first seed");
  ver->add_option("--count", ver_count, "number of seeds");
  ver->add_option("--jobs", ver_jobs, "parallel workers for seeds");
  ver->add_option("--checks", ver_checks, "all | hf,lm,degd,bounds subset");

  auto* est = app.add_subcommand("estimate", "complexity estimates");
  std::uint32_t est_n = 0;
  std::string est_degs;
  double est_omega = 2.0;
  est->add_option("--n", est_n, "variable count")->required();
  est->add_option("--degrees", est_degs, "comma-separated degree list")
      ->required();
  est->add_option("--omega", est_omega, "matrix multiplication exponent");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gb->parsed()) {
      if (capopt->count() > 0) gb_cap = gb_cap_raw;
      return run_gb(gb_file, gb_engine, gb_hom, gb_dmax, gb_cap, pretty);
    }
    if (hil->parsed())
      return run_hilbert(hil_n, parse_degree_list(hil_degs), hil_prec, pretty);
    if (ver->parsed())
      return run_verify(ver_golden, ver_p, ver_n, ver_degs, ver_seed,
                        ver_count, ver_jobs, ver_checks, pretty);
    if (est->parsed())
      return run_estimate(est_n, parse_degree_list(est_degs), est_omega,
                          pretty);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const PreconditionUnverified& e) {
    std::cerr << "precondition unverified: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotArtinianWithinCap& e) {
    std::cerr << "not Artinian within cap: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotArtinian& e) {
    std::cerr << "not Artinian: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const TimeoutDegree& e) {
    std::cerr << "step degree cap hit: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitPass;
}
