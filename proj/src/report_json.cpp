#include "semigb/report_json.hpp"

namespace semigb {

using nlohmann::json;

json step_log_json(const StepLog& log, const RingCtx& ctx) {
  json steps = json::array();
  for (const auto& r : log.steps) {
    json lms = json::array();
    for (const auto& m : r.new_lms) lms.push_back(to_string(m, ctx));
    steps.push_back({{"degree", r.degree},
                     {"pairs_processed", r.pairs_processed},
                     {"discarded_coprime", r.discarded_coprime},
                     {"discarded_chain", r.discarded_chain},
                     {"discarded_syzygy", r.discarded_syzygy},
                     {"discarded_duplicate", r.discarded_duplicate},
                     {"skipped_hilbert", r.skipped_hilbert},
                     {"zero_reductions", r.zero_reductions},
                     {"new_elements", r.new_elements},
                     {"new_lms", lms}});
  }
  return {{"steps", steps},
          {"highest_step_degree", log.highest_step_degree},
          {"zero_reductions_total", log.total_zero_reductions()}};
}

json gb_json(const GroebnerBasis& gb, const RingCtx& ctx) {
  json elems = json::array();
  json lms = json::array();
  for (const auto& g : gb.elements) {
    elems.push_back(to_string(g));
    lms.push_back(to_string(g.lm(), ctx));
  }
  return {{"elements", elems},
          {"leading_monomials", lms},
          {"reduced", gb.reduced},
          {"max_degree", gb.elements.empty() ? 0 : gb.max_degree()},
          {"size", gb.elements.size()}};
}

json series_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(c.get_str());
  return {{"coefficients", coeffs},
          {"truncation",
           s.truncation == TruncatedSeries::Truncation::ByBracket
               ? "bracket"
               : "precision"}};
}

json hilbert_json(const HilbertData& h) {
  json j{{"n", h.n},
         {"degrees", h.degrees},
         {"hs_top", series_json(h.hs_top)}};
  if (h.d_reg.finite()) {
    j["d_reg"] = *h.d_reg.value;
    j["hs_hom_prefix"] = series_json(h.hs_hom_prefix);
  } else {
    j["d_reg"] = "infinite";
    j["d_reg_bound"] = h.d_reg.bound;
  }
  return j;
}

json koszul_json(const KoszulReport& rep) {
  json j{{"degrees", rep.degrees},
         {"h1_dimensions", rep.h1_dims},
         {"d_regular_up_to", rep.d_regular_up_to},
         {"is_crypto_semiregular", rep.is_crypto_semiregular}};
  if (rep.d_reg_actual)
    j["d_reg_actual"] = *rep.d_reg_actual;
  else
    j["d_reg_actual"] = "not_artinian";
  if (rep.is_pardue_semiregular)
    j["is_pardue_semiregular"] = *rep.is_pardue_semiregular;
  else
    j["is_pardue_semiregular"] = "cap_exceeded";
  if (rep.first_fall)
    j["first_fall_degree"] = *rep.first_fall;
  return j;
}

json verify_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"applicable", c.applicable},
                      {"witnesses", c.witnesses}});
  }
  json j{{"spec",
          {{"p", rep.spec.p},
           {"n", rep.spec.n},
           {"degrees", rep.spec.degrees},
           {"seed", rep.spec.seed},
           {"require_semiregular", rep.spec.require_semiregular}}},
         {"D", rep.D},
         {"checks", checks},
         {"all_pass", rep.all_pass()}};
  if (rep.golden) j["golden"] = *rep.golden;
  if (rep.bounds) {
    const auto& b = *rep.bounds;
    json bj{{"D", b.D},
            {"two_D_minus_2", b.two_D_minus_2},
            {"macaulay_bound", b.macaulay_bound},
            {"max_gb_deg_affine", b.max_gb_deg_affine},
            {"max_gb_deg_hom", b.max_gb_deg_hom},
            {"sd_hsd_plain", b.sd_hsd_plain}};
    if (b.sd_hsd_seeded) bj["sd_hsd_seeded"] = *b.sd_hsd_seeded;
    if (b.sd_mac_affine) bj["sd_mac_affine"] = *b.sd_mac_affine;
    if (b.sd_mac_hom) bj["sd_mac_hom"] = *b.sd_mac_hom;
    j["bounds"] = bj;
  }
  return j;
}

bool matches_schema(const json& doc, const json& schema, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    bool ok = (t == "object" && doc.is_object()) ||
              (t == "array" && doc.is_array()) ||
              (t == "string" && doc.is_string()) ||
              (t == "integer" && doc.is_number_integer()) ||
              (t == "number" && doc.is_number()) ||
              (t == "boolean" && doc.is_boolean());
    if (!ok) return fail("expected type " + t + " at " + doc.dump().substr(0, 40));
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema["enum"]) ok = ok || v == doc;
    if (!ok) return fail("value not in enum: " + doc.dump().substr(0, 40));
  }
  if (schema.contains("required")) {
    for (const auto& k : schema["required"])
      if (!doc.contains(k.get<std::string>()))
        return fail("missing required key " + k.get<std::string>());
  }
  if (schema.contains("properties") && doc.is_object()) {
    for (auto it = schema["properties"].begin();
         it != schema["properties"].end(); ++it) {
      if (doc.contains(it.key()) &&
          !matches_schema(doc[it.key()], it.value(), why))
        return false;
    }
  }
  if (schema.contains("items") && doc.is_array()) {
    for (const auto& e : doc)
      if (!matches_schema(e, schema["items"], why)) return false;
  }
  return true;
}

}  // namespace semigb
