#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "atlas/class_cache.hpp"
#include "atlas/explorer.hpp"
#include "atlas/grassmannian.hpp"
#include "atlas/tiling.hpp"

namespace atlas {

enum class OutputFormat { kMarkdown, kCsv, kJson };

std::optional<OutputFormat> format_from_string(std::string_view text);

inline constexpr const char* kTableSchema = "atlas-table/1";

struct AtlasConfig {
  int pmax = 7;
  int qmax = 7;
  std::size_t cap = kDefaultCap;
  /// 0 selects hardware concurrency.
  std::size_t workers = 0;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::kMarkdown;
};

/// Finite <-> spherical, finite mutation <-> planar, infinite mutation <->
/// hyperbolic. Inconclusive matches nothing.
bool categories_match(Classification cluster, GeometryClass tiling);

/// Short tags used in rendered tables.
std::string_view category_tag(Classification c);
std::string_view category_tag(GeometryClass g);

struct CorrespondenceRow {
  int p;
  int q;
  int r;
  MutationClassReport cluster;
  TilingReport tiling;
  bool match;

  bool inconclusive() const { return cluster.classification == Classification::kInconclusive; }
};

struct TableSummary {
  std::size_t rows = 0;
  std::size_t mismatches = 0;  // conclusive rows whose categories differ
  std::size_t inconclusive = 0;

  /// 0 when everything matched, 2 on any mismatch, otherwise 3 if any
  /// cluster side was inconclusive.
  int exit_code() const;
};

inline constexpr int kExitMismatch = 2;
inline constexpr int kExitInconclusive = 3;

/// Explores the initial quiver of Gr(p,p+q) (naming finite-mutation classes
/// with elliptic_registry()) and classifies the tiling {p,q}.
CorrespondenceRow classify_cell(int p, int q, const ExploreOptions& options, ClassCache* cache);

/// Every cell 2 <= p <= pmax, 2 <= q <= qmax in row-major order. Cells run as
/// parallel jobs; each exploration is single-threaded, and the output does
/// not depend on config.workers.
std::vector<CorrespondenceRow> classify_table(const AtlasConfig& config, ClassCache* cache);

TableSummary summarize(const std::vector<CorrespondenceRow>& rows);

/// One line/record per row (markdown table, CSV with a fixed header, or a
/// JSON document with schema "atlas-table/1").
std::string render_rows(const std::vector<CorrespondenceRow>& rows, OutputFormat format);

/// Markdown renders the p x q grid (rows p, columns q) plus a summary line;
/// CSV and JSON fall back to render_rows.
std::string render_table(const std::vector<CorrespondenceRow>& rows, OutputFormat format);

}  // namespace atlas
