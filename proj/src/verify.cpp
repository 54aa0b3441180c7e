#include "atlas/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "atlas/correspondence.hpp"
#include "atlas/grassmannian.hpp"
#include "atlas/tiling.hpp"

namespace atlas {

namespace {

enum class Color { kGreen, kYellow, kRed };

struct PrintedCell {
  Color color;
  const char* label;
};

constexpr Color G = Color::kGreen;
constexpr Color Y = Color::kYellow;
constexpr Color R = Color::kRed;

// Grassmannian cluster algebra table, rows p = 2..7, columns q = 2..7.
constexpr PrintedCell kClusterTable[6][6] = {
    {{G, "A1"}, {G, "A2"}, {G, "A3"}, {G, "A4"}, {G, "A5"}, {G, "A6"}},
    {{G, "A2"}, {G, "D4"}, {G, "E6"}, {G, "E8"}, {Y, "E8(1,1)"}, {R, "Gr(3,10)"}},
    {{G, "A3"}, {G, "E6"}, {Y, "E7(1,1)"}, {R, "Gr(4,9)"}, {R, "Gr(4,10)"}, {R, "Gr(4,11)"}},
    {{G, "A4"}, {G, "E8"}, {R, "Gr(5,9)"}, {R, "Gr(5,10)"}, {R, "Gr(5,11)"}, {R, "Gr(5,12)"}},
    {{G, "A5"}, {Y, "E8(1,1)"}, {R, "Gr(6,10)"}, {R, "Gr(6,11)"}, {R, "Gr(6,12)"}, {R, "Gr(6,13)"}},
    {{G, "A6"}, {R, "Gr(7,10)"}, {R, "Gr(7,11)"}, {R, "Gr(7,12)"}, {R, "Gr(7,13)"}, {R, "Gr(7,14)"}},
};

// Regular tiling table, same orientation.
constexpr PrintedCell kTilingTable[6][6] = {
    {{G, "{2,2}"}, {G, "{2,3}"}, {G, "{2,4}"}, {G, "{2,5}"}, {G, "{2,6}"}, {G, "{2,7}"}},
    {{G, "{3,2}"}, {G, "tetrahedron"}, {G, "octahedron"}, {G, "icosahedron"},
     {Y, "triangular tiling"}, {R, "{3,7}"}},
    {{G, "{4,2}"}, {G, "cube"}, {Y, "square tiling"}, {R, "{4,5}"}, {R, "{4,6}"}, {R, "{4,7}"}},
    {{G, "{5,2}"}, {G, "dodecahedron"}, {R, "{5,4}"}, {R, "{5,5}"}, {R, "{5,6}"}, {R, "{5,7}"}},
    {{G, "{6,2}"}, {Y, "hexagonal tiling"}, {R, "{6,4}"}, {R, "{6,5}"}, {R, "{6,6}"}, {R, "{6,7}"}},
    {{G, "{7,2}"}, {R, "{7,3}"}, {R, "{7,4}"}, {R, "{7,5}"}, {R, "{7,6}"}, {R, "{7,7}"}},
};

Classification cluster_color(Color c) {
  switch (c) {
    case Color::kGreen: return Classification::kFiniteType;
    case Color::kYellow: return Classification::kFiniteMutationType;
    case Color::kRed: return Classification::kInfiniteMutationType;
  }
  return Classification::kInconclusive;
}

GeometryClass tiling_color(Color c) {
  switch (c) {
    case Color::kGreen: return GeometryClass::kSpherical;
    case Color::kYellow: return GeometryClass::kPlanar;
    case Color::kRed: return GeometryClass::kHyperbolic;
  }
  return GeometryClass::kHyperbolic;
}

// Collects failures; the first one becomes the criterion's detail.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      if (failures_ == 0) first_failure_ = what;
      ++failures_;
    }
  }
  bool passed() const { return failures_ == 0; }
  std::string detail(const std::string& summary) const {
    if (passed()) return summary + " (" + std::to_string(checks_) + " checks)";
    return std::to_string(failures_) + " of " + std::to_string(checks_) +
           " checks failed; first: " + first_failure_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string cell_name(int p, int q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

CriterionResult timed(int id, std::string title,
                      const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [passed, detail] = body();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {id, std::move(title), passed, std::move(detail), seconds};
}

ExploreOptions cell_options(const VerifyOptions& options) {
  ExploreOptions o;
  o.cap = options.cap;
  o.workers = 1;
  o.registry = &elliptic_registry();
  return o;
}

MutationClassReport explore_cell(int p, int q, const VerifyOptions& options) {
  return explore_cached(initial_quiver({p, q}), cell_options(options), options.cache).report;
}

using RowMap = std::map<std::pair<int, int>, CorrespondenceRow>;

RowMap table_rows(const VerifyOptions& options, int bound) {
  AtlasConfig config;
  config.pmax = bound;
  config.qmax = bound;
  config.cap = options.cap;
  config.workers = options.workers;
  RowMap rows;
  for (auto& row : classify_table(config, options.cache)) {
    rows.emplace(std::pair{row.p, row.q}, std::move(row));
  }
  return rows;
}

CriterionResult main_claim_from(const RowMap& rows, int bound, double seconds) {
  Check check;
  std::size_t mismatches = 0;
  std::size_t inconclusive = 0;
  for (const auto& [cell, row] : rows) {
    if (row.inconclusive()) ++inconclusive;
    else if (!row.match) ++mismatches;
    check.expect(!row.inconclusive(), "inconclusive at " + cell_name(row.p, row.q));
    check.expect(row.match, "category mismatch at " + cell_name(row.p, row.q) + ": " +
                                std::string(to_string(row.cluster.classification)) + " vs " +
                                std::string(to_string(row.tiling.geometry)));
  }
  const auto expected_rows = static_cast<std::size_t>((bound - 1) * (bound - 1));
  check.expect(rows.size() == expected_rows, "row count " + std::to_string(rows.size()));
  return {3, "Main claim 2<=p,q<=" + std::to_string(bound), check.passed(),
          check.detail(std::to_string(rows.size()) + " cells, " + std::to_string(mismatches) +
                       " mismatches, " + std::to_string(inconclusive) + " inconclusive"),
          seconds};
}

CriterionResult duality_from(const RowMap& rows, int bound, double seconds) {
  Check check;
  for (const auto& [cell, a] : rows) {
    const auto it = rows.find({cell.second, cell.first});
    if (it == rows.end()) {
      check.expect(false, "missing dual of " + cell_name(a.p, a.q));
      continue;
    }
    const CorrespondenceRow& b = it->second;
    const std::string where = cell_name(a.p, a.q);
    check.expect(a.cluster.classification == b.cluster.classification, "classification " + where);
    check.expect(a.cluster.type_name == b.cluster.type_name, "type name " + where);
    check.expect(a.cluster.class_size == b.cluster.class_size, "class size " + where);
    check.expect(expected_classification({a.p, a.q}) == expected_classification({a.q, a.p}),
                 "closed-form classification " + where);
    check.expect(a.tiling.geometry == b.tiling.geometry, "geometry " + where);
    check.expect(a.tiling.gram_signature == b.tiling.gram_signature, "signature " + where);
    check.expect(a.tiling.spherical.has_value() == b.tiling.spherical.has_value(),
                 "spherical data presence " + where);
    if (a.tiling.spherical && b.tiling.spherical) {
      const auto& x = *a.tiling.spherical;
      const auto& y = *b.tiling.spherical;
      check.expect(x.group_order == y.group_order, "group order " + where);
      check.expect(x.vertices == y.faces && x.edges == y.edges && x.faces == y.vertices,
                   "(V,E,F) swap " + where);
    }
  }
  return {5, "Duality 2<=p,q<=" + std::to_string(bound), check.passed(),
          check.detail(std::to_string(rows.size()) + " cells invariant under p<->q"), seconds};
}

// Positive (V,E,F) with qV = 2E = pF and V - E + F = 2, found by scanning E.
std::optional<SphericalData> solve_euler(int p, int q) {
  for (std::int64_t e = 1; e <= 100'000; ++e) {
    if ((2 * e) % q != 0 || (2 * e) % p != 0) continue;
    const std::int64_t v = 2 * e / q;
    const std::int64_t f = 2 * e / p;
    if (v - e + f == 2) return SphericalData{v, e, f, 4 * e};  // one flag per (edge, end, side)
  }
  return std::nullopt;
}

}  // namespace

CriterionResult verify_cluster_table(const VerifyOptions& options) {
  return timed(1, "Cluster table 2<=p,q<=7", [&] {
    Check check;
    double slowest_red = 0;
    for (int p = 2; p <= 7; ++p) {
      for (int q = 2; q <= 7; ++q) {
        const PrintedCell& printed = kClusterTable[p - 2][q - 2];
        const auto t0 = std::chrono::steady_clock::now();
        const ExchangeMatrix seed = initial_quiver({p, q});
        const MutationClassReport report = explore_cell(p, q, options);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const std::string where = cell_name(p, q);
        check.expect(report.classification == cluster_color(printed.color),
                     "color at " + where + ": got " +
                         std::string(to_string(report.classification)));
        if (printed.color == Color::kRed) {
          slowest_red = std::max(slowest_red, elapsed);
          check.expect(GrassmannianSpec(p, q).label() == printed.label, "label at " + where);
          check.expect(!report.type_name.has_value(), "red cell carries a name at " + where);
          check.expect(report.infinite_witness.has_value() &&
                           has_infinite_witness_weight(replay(seed, *report.infinite_witness)),
                       "witness does not replay at " + where);
          check.expect(elapsed < 1.0, "red cell took " + std::to_string(elapsed) + " s at " + where);
        } else {
          check.expect(report.type_name.value_or("") == printed.label,
                       "name at " + where + ": got " + report.type_name.value_or("<none>"));
          check.expect(report.class_size.has_value(), "class not closed at " + where);
        }
      }
    }
    std::ostringstream summary;
    summary << "36 cells; slowest red cell " << slowest_red * 1e3 << " ms";
    return std::pair{check.passed(), check.detail(summary.str())};
  });
}

CriterionResult verify_tiling_table(const VerifyOptions&) {
  return timed(2, "Tiling table 2<=p,q<=7", [] {
    Check check;
    for (int p = 2; p <= 7; ++p) {
      for (int q = 2; q <= 7; ++q) {
        const PrintedCell& printed = kTilingTable[p - 2][q - 2];
        const SchlafliSymbol sym(p, q);
        const std::string where = cell_name(p, q);
        check.expect(geometry_class(sym).geometry == tiling_color(printed.color), "color " + where);
        check.expect(table_label(sym) == printed.label,
                     "label " + where + ": got " + table_label(sym));
        if (p == 2) check.expect(names(sym).tiling == "hosohedron", "hosohedron " + where);
        if (q == 2 && p > 2) check.expect(names(sym).tiling == "dihedron", "dihedron " + where);
      }
    }
    return std::pair{check.passed(), check.detail("36 cells")};
  });
}

CriterionResult verify_main_claim(const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const RowMap rows = table_rows(options, options.claim_bound);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return main_claim_from(rows, options.claim_bound, s);
}

CriterionResult verify_summary_table(const VerifyOptions& options) {
  return timed(4, "Summary table rows", [&] {
    Check check;
    struct Row {
      int p, q;
      const char* type;
      const char* tiling;
      const char* dual_tiling;
      const char* coxeter;
      Classification cls;
      GeometryClass geo;
    };
    const Classification F = Classification::kFiniteType;
    const Classification M = Classification::kFiniteMutationType;
    const GeometryClass S = GeometryClass::kSpherical;
    const GeometryClass P = GeometryClass::kPlanar;
    std::vector<Row> table = {
        {3, 3, "D4", "tetrahedron", "tetrahedron", "A3", F, S},
        {3, 4, "E6", "octahedron", "cube", "BC3", F, S},
        {3, 5, "E8", "icosahedron", "dodecahedron", "H3", F, S},
        {4, 4, "E7(1,1)", "square tiling", "square tiling", "C2(1)", M, P},
        {3, 6, "E8(1,1)", "triangular tiling", "hexagonal tiling", "G2(1)", M, P},
    };
    std::vector<std::string> family_types;
    std::vector<std::string> family_coxeter;
    for (int p = 2; p <= 7; ++p) {
      family_types.push_back("A" + std::to_string(p - 1));
      family_coxeter.push_back("A1×I2(" + std::to_string(p) + ")");
    }
    for (int p = 2; p <= 7; ++p) {
      table.push_back({2, p, family_types[p - 2].c_str(), "hosohedron",
                       p == 2 ? "hosohedron" : "dihedron", family_coxeter[p - 2].c_str(), F, S});
    }
    for (const Row& row : table) {
      for (bool flipped : {false, true}) {
        const int p = flipped ? row.q : row.p;
        const int q = flipped ? row.p : row.q;
        const std::string where = cell_name(p, q);
        const MutationClassReport report = explore_cell(p, q, options);
        check.expect(report.classification == row.cls, "classification " + where);
        check.expect(report.type_name.value_or("") == row.type,
                     "type " + where + ": got " + report.type_name.value_or("<none>"));
        const TilingNames label = names({p, q});
        check.expect(label.tiling == (flipped ? row.dual_tiling : row.tiling),
                     "tiling name " + where + ": got " + label.tiling);
        check.expect(label.coxeter == row.coxeter, "coxeter name " + where + ": got " + label.coxeter);
        check.expect(geometry_class({p, q}).geometry == row.geo, "geometry " + where);
      }
    }
    return std::pair{check.passed(), check.detail("7 named rows and their duals")};
  });
}

CriterionResult verify_duality(const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const RowMap rows = table_rows(options, options.claim_bound);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return duality_from(rows, options.claim_bound, s);
}

CriterionResult verify_trichotomy(const VerifyOptions& options) {
  const int bound = options.trichotomy_bound;
  return timed(6, "Trichotomy 2<=p,q<=" + std::to_string(bound), [bound] {
    Check check;
    for (int p = 2; p <= bound; ++p) {
      for (int q = 2; q <= bound; ++q) {
        const SchlafliSymbol sym(p, q);
        const std::string where = cell_name(p, q);
        const GeometryClass by_r = geometry_class(sym).geometry;
        const int sign = angular_defect_sign(sym);
        const GeometryClass by_defect = sign > 0    ? GeometryClass::kSpherical
                                        : sign == 0 ? GeometryClass::kPlanar
                                                    : GeometryClass::kHyperbolic;
        const auto by_gram = geometry_from_signature(gram_signature(sym));
        check.expect(by_r == by_defect, "defect sign disagrees at " + where);
        check.expect(by_gram.has_value() && *by_gram == by_r, "Gram signature disagrees at " + where);
        const double defect = angular_defect(sym);
        check.expect(sign == 0 ? std::abs(defect) < 1e-12 : (defect > 0) == (sign > 0),
                     "floating defect disagrees at " + where);
        if (by_r == GeometryClass::kSpherical) {
          bool integral = true;
          try {
            (void)spherical_data(sym);
          } catch (const std::exception&) {
            integral = false;
          }
          check.expect(integral, "non-integral spherical data at " + where);
        }
      }
    }
    return std::pair{check.passed(),
                     check.detail(std::to_string((bound - 1) * (bound - 1)) + " symbols")};
  });
}

CriterionResult verify_spherical_data(const VerifyOptions&) {
  return timed(7, "Spherical data", [] {
    Check check;
    std::vector<std::pair<SchlafliSymbol, SphericalData>> frozen = {
        {{3, 3}, {4, 6, 4, 24}},     {{4, 3}, {8, 12, 6, 48}},     {{3, 4}, {6, 12, 8, 48}},
        {{5, 3}, {20, 30, 12, 120}}, {{3, 5}, {12, 30, 20, 120}},
    };
    for (int q = 2; q <= 50; ++q) frozen.push_back({{2, q}, {2, q, q, 4 * q}});
    for (const auto& [sym, expected] : frozen) {
      const std::string where = sym.to_string();
      const SphericalData got = spherical_data(sym);
      check.expect(got == expected, "formula values at " + where);
      const auto brute = solve_euler(sym.p(), sym.q());
      check.expect(brute.has_value() && *brute == expected, "Euler/flag count at " + where);
      check.expect(got.vertices - got.edges + got.faces == 2, "Euler characteristic " + where);
      check.expect(sym.q() * got.vertices == 2 * got.edges && 2 * got.edges == sym.p() * got.faces,
                   "incidence " + where);
    }
    return std::pair{check.passed(), check.detail(std::to_string(frozen.size()) + " symbols")};
  });
}

std::vector<CriterionResult> verify_all(const VerifyOptions& options) {
  std::vector<CriterionResult> results;
  results.push_back(verify_cluster_table(options));
  results.push_back(verify_tiling_table(options));
  const auto t0 = std::chrono::steady_clock::now();
  const RowMap rows = table_rows(options, options.claim_bound);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  results.push_back(main_claim_from(rows, options.claim_bound, s));
  results.push_back(verify_summary_table(options));
  results.push_back(duality_from(rows, options.claim_bound, 0.0));
  results.push_back(verify_trichotomy(options));
  results.push_back(verify_spherical_data(options));
  return results;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.title << ": "
      << result.detail << " (" << result.seconds << " s)";
  return out.str();
}

}  // namespace atlas
