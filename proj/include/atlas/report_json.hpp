#pragma once

#include <json.hpp>

#include "atlas/exchange_matrix.hpp"
#include "atlas/explorer.hpp"
#include "atlas/tiling.hpp"

namespace atlas {

inline constexpr const char* kReportSchema = "atlas-report/1";

nlohmann::ordered_json to_json(const ExchangeMatrix& m);
ExchangeMatrix matrix_from_json(const nlohmann::json& j);

/// {"classification", "class_size", "max_weight_seen", "infinite_witness",
///  "type_name", "explored"}; absent optionals are null.
nlohmann::ordered_json to_json(const MutationClassReport& report);
/// Throws Error{kCacheCorrupt} on a malformed document.
MutationClassReport report_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const TilingReport& report);

}  // namespace atlas
