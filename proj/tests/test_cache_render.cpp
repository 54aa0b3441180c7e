#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "atlas/class_cache.hpp"
#include "atlas/correspondence.hpp"
#include "atlas/error.hpp"
#include "atlas/grassmannian.hpp"
#include "atlas/report_json.hpp"

using namespace atlas;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("atlas-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("report JSON round trip") {
  MutationClassReport infinite;
  infinite.classification = Classification::kInfiniteMutationType;
  infinite.max_weight_seen = 4;
  infinite.infinite_witness = MutationSequence{{3, 1, 4}};
  infinite.explored = 17;
  CHECK(report_from_json(nlohmann::json::parse(to_json(infinite).dump())) == infinite);

  const auto finite = explore(initial_quiver({3, 3}));
  const auto j = to_json(finite);
  CHECK(j["classification"] == "FiniteType");
  CHECK(j["class_size"] == 6);
  CHECK(j["infinite_witness"].is_null());
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == finite);

  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"classification":"bogus"})")), Error);
  CHECK(matrix_from_json(to_json(initial_quiver({3, 4}))) == initial_quiver({3, 4}));
}

TEST_CASE("class cache hits reproduce the computed class") {
  TempDir tmp;
  ClassCache cache(tmp.path);
  const auto start = initial_quiver({3, 4});
  ExploreOptions options;

  bool hit = true;
  const auto first = explore_cached(start, options, &cache, &hit);
  CHECK_FALSE(hit);
  const fs::path file = cache.path_for(canonical_key(start));
  REQUIRE(fs::exists(file));
  const std::string bytes = slurp(file);

  const auto second = explore_cached(start, options, &cache, &hit);
  CHECK(hit);
  CHECK(second.report == first.report);
  CHECK(second.members == first.members);
  CHECK(slurp(file) == bytes);

  // A different cap is a separate entry in the same file.
  options.cap = 20;
  const auto capped = explore_cached(start, options, &cache, &hit);
  CHECK_FALSE(hit);
  CHECK(capped.report.classification == Classification::kInconclusive);
  const auto doc = nlohmann::json::parse(slurp(file));
  CHECK(doc["schema"] == kCacheSchema);
  CHECK(doc["entries"].size() == 2);
  CHECK(doc["members"].size() == 67);

  // Isomorphic but differently labeled starts share the file.
  options.cap = kDefaultCap;
  const auto dual = initial_quiver({4, 3});
  REQUIRE(cache.path_for(canonical_key(dual)) == file);
  const auto from_dual = explore_cached(dual, options, &cache, &hit);
  CHECK_FALSE(hit);
  CHECK(from_dual.report == explore(dual, options));
}

TEST_CASE("corrupt cache files are recomputed") {
  TempDir tmp;
  ClassCache cache(tmp.path);
  const auto start = initial_quiver({3, 3});
  const fs::path file = cache.path_for(canonical_key(start));
  {
    std::ofstream out(file);
    out << "{ not json";
  }
  CHECK_FALSE(cache.load(start, kDefaultCap).has_value());
  bool hit = true;
  const auto cls = explore_cached(start, {}, &cache, &hit);
  CHECK_FALSE(hit);
  CHECK(cls.report.class_size == 6u);
  CHECK(cache.load(start, kDefaultCap).has_value());
}

TEST_CASE("correspondence rows and rendering") {
  CHECK(categories_match(Classification::kFiniteType, GeometryClass::kSpherical));
  CHECK(categories_match(Classification::kFiniteMutationType, GeometryClass::kPlanar));
  CHECK(categories_match(Classification::kInfiniteMutationType, GeometryClass::kHyperbolic));
  CHECK_FALSE(categories_match(Classification::kFiniteType, GeometryClass::kPlanar));
  CHECK_FALSE(categories_match(Classification::kInconclusive, GeometryClass::kSpherical));

  AtlasConfig config;
  config.pmax = 4;
  config.qmax = 5;
  const auto rows = classify_table(config, nullptr);
  REQUIRE(rows.size() == 12);
  CHECK(rows.front().p == 2);
  CHECK(rows.front().q == 2);
  CHECK(rows.back().p == 4);
  CHECK(rows.back().q == 5);
  const auto summary = summarize(rows);
  CHECK(summary.mismatches == 0);
  CHECK(summary.inconclusive == 0);
  CHECK(summary.exit_code() == 0);

  const std::string csv = render_rows(rows, OutputFormat::kCsv);
  CHECK(csv.rfind("p,q,r,cluster,type_name,class_size,max_weight_seen,witness_length,geometry,"
                  "tiling_name,coxeter_name,gram_signature,group_order,V,E,F,match\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);

  const auto doc = nlohmann::json::parse(render_rows(rows, OutputFormat::kJson));
  CHECK(doc["schema"] == kTableSchema);
  CHECK(doc["rows"].size() == 12);
  CHECK(doc["mismatches"] == 0);

  const std::string grid = render_table(rows, OutputFormat::kMarkdown);
  CHECK(grid.rfind("| p\\q | 2 | 3 | 4 | 5 |\n", 0) == 0);
  CHECK(grid.find("finite D4 / spherical tetrahedron") != std::string::npos);
  CHECK(grid.find("finite-mutation E7(1,1) / planar square tiling") != std::string::npos);
  CHECK(grid.find("rows: 12, mismatches: 0, inconclusive: 0") != std::string::npos);

  // Inconclusive cells are flagged, never counted as matches.
  ExploreOptions tiny;
  tiny.cap = 5;
  const std::vector<CorrespondenceRow> capped{classify_cell(3, 5, tiny, nullptr)};
  CHECK(capped[0].inconclusive());
  CHECK_FALSE(capped[0].match);
  CHECK(summarize(capped).exit_code() == kExitInconclusive);
  CHECK(render_table(capped, OutputFormat::kMarkdown).find("**INCONCLUSIVE**") != std::string::npos);

  TableSummary bad;
  bad.mismatches = 1;
  bad.inconclusive = 1;
  CHECK(bad.exit_code() == kExitMismatch);
}
