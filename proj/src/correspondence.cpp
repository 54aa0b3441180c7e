#include "atlas/correspondence.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "atlas/report_json.hpp"

namespace atlas {

using nlohmann::ordered_json;

std::optional<OutputFormat> format_from_string(std::string_view text) {
  if (text == "markdown") return OutputFormat::kMarkdown;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  return std::nullopt;
}

bool categories_match(Classification cluster, GeometryClass tiling) {
  switch (cluster) {
    case Classification::kFiniteType: return tiling == GeometryClass::kSpherical;
    case Classification::kFiniteMutationType: return tiling == GeometryClass::kPlanar;
    case Classification::kInfiniteMutationType: return tiling == GeometryClass::kHyperbolic;
    case Classification::kInconclusive: return false;
  }
  return false;
}

std::string_view category_tag(Classification c) {
  switch (c) {
    case Classification::kFiniteType: return "finite";
    case Classification::kFiniteMutationType: return "finite-mutation";
    case Classification::kInfiniteMutationType: return "infinite-mutation";
    case Classification::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view category_tag(GeometryClass g) {
  switch (g) {
    case GeometryClass::kSpherical: return "spherical";
    case GeometryClass::kPlanar: return "planar";
    case GeometryClass::kHyperbolic: return "hyperbolic";
  }
  return "hyperbolic";
}

int TableSummary::exit_code() const {
  if (mismatches > 0) return kExitMismatch;
  if (inconclusive > 0) return kExitInconclusive;
  return 0;
}

CorrespondenceRow classify_cell(int p, int q, const ExploreOptions& options, ClassCache* cache) {
  const GrassmannianSpec spec(p, q);
  ExploreOptions opts = options;
  opts.registry = &elliptic_registry();
  MutationClassReport cluster = explore_cached(initial_quiver(spec), opts, cache).report;
  TilingReport tiling = tiling_report(SchlafliSymbol(p, q));
  const bool match = categories_match(cluster.classification, tiling.geometry);
  return {p, q, spec.r(), std::move(cluster), std::move(tiling), match};
}

std::vector<CorrespondenceRow> classify_table(const AtlasConfig& config, ClassCache* cache) {
  std::vector<std::pair<int, int>> cells;
  for (int p = 2; p <= config.pmax; ++p) {
    for (int q = 2; q <= config.qmax; ++q) cells.emplace_back(p, q);
  }
  ExploreOptions options;
  options.cap = config.cap;
  options.workers = 1;

  std::vector<std::optional<CorrespondenceRow>> slots(cells.size());
  std::size_t workers = config.workers != 0 ? config.workers
                                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cells.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto job = [&] {
    for (std::size_t i = cursor++; i < cells.size(); i = cursor++) {
      try {
        slots[i] = classify_cell(cells[i].first, cells[i].second, options, cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    job();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(job);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CorrespondenceRow> rows;
  rows.reserve(slots.size());
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

TableSummary summarize(const std::vector<CorrespondenceRow>& rows) {
  TableSummary s;
  s.rows = rows.size();
  for (const auto& row : rows) {
    if (row.inconclusive()) {
      ++s.inconclusive;
    } else if (!row.match) {
      ++s.mismatches;
    }
  }
  return s;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string signature_text(const GramSignature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.zero) + "," +
         std::to_string(s.negative) + ")";
}

ordered_json row_json(const CorrespondenceRow& row) {
  ordered_json j;
  j["p"] = row.p;
  j["q"] = row.q;
  j["r"] = row.r;
  j["grassmannian"] = GrassmannianSpec(row.p, row.q).label();
  j["cluster"] = to_json(row.cluster);
  j["tiling"] = to_json(row.tiling);
  j["match"] = row.match;
  return j;
}

std::string cluster_cell(const MutationClassReport& c) {
  std::string text(category_tag(c.classification));
  if (c.type_name) text += " " + *c.type_name;
  return text;
}

std::string tiling_cell(const TilingReport& t) {
  return std::string(category_tag(t.geometry)) + " " + t.tiling_name;
}

}  // namespace

std::string render_rows(const std::vector<CorrespondenceRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kMarkdown: {
      out << "| p | q | r | Grassmannian | cluster | type | class size | tiling | tiling name | "
             "Coxeter | match |\n";
      out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& row : rows) {
        out << "| " << row.p << " | " << row.q << " | " << row.r << " | "
            << GrassmannianSpec(row.p, row.q).label() << " | "
            << category_tag(row.cluster.classification) << " | "
            << row.cluster.type_name.value_or("-") << " | "
            << (row.cluster.class_size ? std::to_string(*row.cluster.class_size) : "-") << " | "
            << category_tag(row.tiling.geometry) << " | " << row.tiling.tiling_name << " | "
            << row.tiling.coxeter_name << " | " << (row.match ? "yes" : "NO") << " |\n";
      }
      break;
    }
    case OutputFormat::kCsv: {
      out << "p,q,r,cluster,type_name,class_size,max_weight_seen,witness_length,geometry,"
             "tiling_name,coxeter_name,gram_signature,group_order,V,E,F,match\n";
      for (const auto& row : rows) {
        const auto& c = row.cluster;
        const auto& t = row.tiling;
        out << row.p << ',' << row.q << ',' << row.r << ',' << to_string(c.classification) << ','
            << csv_field(c.type_name.value_or("")) << ','
            << (c.class_size ? std::to_string(*c.class_size) : "") << ',' << c.max_weight_seen
            << ',' << (c.infinite_witness ? std::to_string(c.infinite_witness->size()) : "")
            << ',' << to_string(t.geometry) << ',' << csv_field(t.tiling_name) << ','
            << csv_field(t.coxeter_name) << ',' << csv_field(signature_text(t.gram_signature))
            << ',';
        if (t.spherical) {
          out << t.spherical->group_order << ',' << t.spherical->vertices << ','
              << t.spherical->edges << ',' << t.spherical->faces;
        } else {
          out << ",,,";
        }
        out << ',' << (row.match ? "true" : "false") << '\n';
      }
      break;
    }
    case OutputFormat::kJson: {
      const TableSummary s = summarize(rows);
      ordered_json doc;
      doc["schema"] = kTableSchema;
      doc["rows"] = ordered_json::array();
      for (const auto& row : rows) doc["rows"].push_back(row_json(row));
      doc["mismatches"] = s.mismatches;
      doc["inconclusive"] = s.inconclusive;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_table(const std::vector<CorrespondenceRow>& rows, OutputFormat format) {
  if (format != OutputFormat::kMarkdown) return render_rows(rows, format);
  int pmax = 2;
  int qmax = 2;
  for (const auto& row : rows) {
    pmax = std::max(pmax, row.p);
    qmax = std::max(qmax, row.q);
  }
  std::ostringstream out;
  out << "| p\\q |";
  for (int q = 2; q <= qmax; ++q) out << ' ' << q << " |";
  out << "\n|---|";
  for (int q = 2; q <= qmax; ++q) out << "---|";
  out << '\n';
  for (int p = 2; p <= pmax; ++p) {
    out << "| " << p << " |";
    for (int q = 2; q <= qmax; ++q) {
      auto it = std::find_if(rows.begin(), rows.end(),
                             [&](const auto& row) { return row.p == p && row.q == q; });
      if (it == rows.end()) {
        out << "  |";
        continue;
      }
      out << ' ' << cluster_cell(it->cluster) << " / " << tiling_cell(it->tiling);
      if (!it->match) out << (it->inconclusive() ? " **INCONCLUSIVE**" : " **MISMATCH**");
      out << " |";
    }
    out << '\n';
  }
  const TableSummary s = summarize(rows);
  out << "\nrows: " << s.rows << ", mismatches: " << s.mismatches
      << ", inconclusive: " << s.inconclusive << '\n';
  return out.str();
}

}  // namespace atlas
