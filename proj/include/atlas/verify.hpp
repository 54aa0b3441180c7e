#pragma once

#include <string>
#include <vector>

#include "atlas/class_cache.hpp"
#include "atlas/explorer.hpp"

namespace atlas {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;  // first failure, or a short summary on success
  double seconds;
};

struct VerifyOptions {
  std::size_t cap = kDefaultCap;
  /// Parallel cell jobs; 0 selects hardware concurrency.
  std::size_t workers = 0;
  ClassCache* cache = nullptr;
  int claim_bound = 12;       // main claim and duality: 2 <= p,q <= claim_bound
  int trichotomy_bound = 50;  // tiling trichotomy: 2 <= p,q <= trichotomy_bound
};

/// Both tables on 2 <= p,q <= 7 against the printed colors and labels,
/// including the elliptic names and a < 1 s early exit on every red cell.
CriterionResult verify_cluster_table(const VerifyOptions& options);
CriterionResult verify_tiling_table(const VerifyOptions& options);
/// Cluster category equals tiling category for every cell, with no
/// inconclusive results.
CriterionResult verify_main_claim(const VerifyOptions& options);
/// The seven named rows of the summary table.
CriterionResult verify_summary_table(const VerifyOptions& options);
/// p <-> q invariance of both classifications and their data.
CriterionResult verify_duality(const VerifyOptions& options);
/// Integer r-test, exact defect sign and Gram signature agree.
CriterionResult verify_trichotomy(const VerifyOptions& options);
/// Frozen (V,E,F,|G|) values cross-checked by brute-force Euler solving and
/// flag counting.
CriterionResult verify_spherical_data(const VerifyOptions& options);

/// Criteria 1-7 in order.
std::vector<CriterionResult> verify_all(const VerifyOptions& options);

/// "PASS [3] title: detail (0.12 s)"
std::string format_result(const CriterionResult& result);

}  // namespace atlas
