#include "atlas/report_json.hpp"

#include "atlas/error.hpp"

namespace atlas {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const ExchangeMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (Weight w : m.row(i)) row.push_back(w);
    rows.push_back(std::move(row));
  }
  return rows;
}

ExchangeMatrix matrix_from_json(const json& j) {
  return ExchangeMatrix::from_matrix(j.get<std::vector<std::vector<Weight>>>());
}

ordered_json to_json(const MutationClassReport& report) {
  ordered_json j;
  j["classification"] = std::string(to_string(report.classification));
  j["class_size"] = report.class_size ? ordered_json(*report.class_size) : ordered_json(nullptr);
  j["max_weight_seen"] = report.max_weight_seen;
  j["infinite_witness"] = report.infinite_witness
                              ? ordered_json(report.infinite_witness->vertices)
                              : ordered_json(nullptr);
  j["type_name"] = report.type_name ? ordered_json(*report.type_name) : ordered_json(nullptr);
  j["explored"] = report.explored;
  return j;
}

MutationClassReport report_from_json(const json& j) {
  try {
    MutationClassReport report;
    const auto cls = classification_from_string(j.at("classification").get<std::string>());
    if (!cls) throw Error(Errc::kCacheCorrupt, "unknown classification");
    report.classification = *cls;
    if (!j.at("class_size").is_null()) report.class_size = j.at("class_size").get<std::size_t>();
    report.max_weight_seen = j.at("max_weight_seen").get<Weight>();
    if (!j.at("infinite_witness").is_null()) {
      report.infinite_witness =
          MutationSequence{j.at("infinite_witness").get<std::vector<Vertex>>()};
    }
    if (!j.at("type_name").is_null()) report.type_name = j.at("type_name").get<std::string>();
    report.explored = j.at("explored").get<std::size_t>();
    return report;
  } catch (const json::exception& e) {
    throw Error(Errc::kCacheCorrupt, std::string("malformed report: ") + e.what());
  }
}

ordered_json to_json(const TilingReport& report) {
  ordered_json j;
  j["symbol"] = report.symbol.to_string();
  j["geometry"] = std::string(to_string(report.geometry));
  j["r"] = report.r;
  j["angular_defect"] = report.defect;
  j["gram_signature"] = {report.gram_signature.positive, report.gram_signature.zero,
                         report.gram_signature.negative};
  if (report.spherical) {
    j["counts"] = {{"V", report.spherical->vertices},
                   {"E", report.spherical->edges},
                   {"F", report.spherical->faces}};
    j["group_order"] = report.spherical->group_order;
  } else {
    j["counts"] = nullptr;
    j["group_order"] = nullptr;
  }
  j["tiling_name"] = report.tiling_name;
  j["coxeter_name"] = report.coxeter_name;
  return j;
}

}  // namespace atlas
