#pragma once

#include <json.hpp>

#include "semigb/buchberger.hpp"
#include "semigb/f5.hpp"
#include "semigb/koszul.hpp"
#include "semigb/series.hpp"
#include "semigb/verify.hpp"

namespace semigb {

nlohmann::json step_log_json(const StepLog& log, const RingCtx& ctx);
nlohmann::json gb_json(const GroebnerBasis& gb, const RingCtx& ctx);
nlohmann::json series_json(const TruncatedSeries& s);
nlohmann::json hilbert_json(const HilbertData& h);
nlohmann::json koszul_json(const KoszulReport& rep);
nlohmann::json verify_json(const VerifyReport& rep);

// Small structural validator for the subset of JSON Schema used by the
// checked-in report schema: type, properties, required, items, enum.
bool matches_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                    std::string* why = nullptr);

}  // namespace semigb
