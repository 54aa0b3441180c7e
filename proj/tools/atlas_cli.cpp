// atlas: Grassmannian cluster algebras vs. regular tilings {p,q}.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "atlas/canonical.hpp"
#include "atlas/class_cache.hpp"
#include "atlas/correspondence.hpp"
#include "atlas/error.hpp"
#include "atlas/grassmannian.hpp"
#include "atlas/report_json.hpp"
#include "atlas/verify.hpp"

namespace {

using namespace atlas;

struct CommonFlags {
  std::size_t cap = kDefaultCap;
  std::size_t workers = 0;
  std::string format = "markdown";
  std::string cache_dir;
  bool no_cache = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--cap", flags.cap, "Maximum canonical forms per class search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", flags.workers, "Worker threads (0 = available parallelism)");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  cmd->add_option("--cache-dir", flags.cache_dir,
                  "Class cache directory (default: $ATLAS_CACHE or ./.atlas-cache)");
  cmd->add_flag("--no-cache", flags.no_cache, "Neither read nor write the class cache");
}

std::unique_ptr<ClassCache> open_cache(const CommonFlags& flags) {
  if (flags.no_cache) return nullptr;
  std::string dir = flags.cache_dir;
  if (dir.empty()) {
    const char* env = std::getenv("ATLAS_CACHE");
    dir = env != nullptr && *env != '\0' ? env : ".atlas-cache";
  }
  return std::make_unique<ClassCache>(dir);
}

OutputFormat parse_format(const std::string& text) { return *format_from_string(text); }

int cmd_classify(int p, int q, const CommonFlags& flags) {
  auto cache = open_cache(flags);
  ExploreOptions options;
  options.cap = flags.cap;
  options.workers = flags.workers;
  const std::vector<CorrespondenceRow> rows{classify_cell(p, q, options, cache.get())};
  std::cout << render_rows(rows, parse_format(flags.format));
  return summarize(rows).exit_code();
}

int cmd_table(int pmax, int qmax, const CommonFlags& flags) {
  auto cache = open_cache(flags);
  AtlasConfig config;
  config.pmax = pmax;
  config.qmax = qmax;
  config.cap = flags.cap;
  config.workers = flags.workers;
  config.format = parse_format(flags.format);
  const auto rows = classify_table(config, cache.get());
  std::cout << render_table(rows, config.format);
  return summarize(rows).exit_code();
}

int cmd_quiver(int p, int q, const std::string& format) {
  const ExchangeMatrix m = initial_quiver({p, q});
  if (format == "dot") {
    std::cout << to_dot(m);
  } else {
    std::cout << serialize(m) << "\n";
  }
  return 0;
}

int cmd_explore(int p, int q, const CommonFlags& flags) {
  auto cache = open_cache(flags);
  const GrassmannianSpec spec(p, q);
  const ExchangeMatrix start = initial_quiver(spec);
  ExploreOptions options;
  options.cap = flags.cap;
  options.workers = flags.workers;
  options.registry = &elliptic_registry();
  bool hit = false;
  const MutationClassReport report = explore_cached(start, options, cache.get(), &hit).report;
  if (hit) std::cerr << "served from cache " << cache->path_for(canonical_key(start)).string() << "\n";

  const auto j = to_json(report);
  switch (parse_format(flags.format)) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["schema"] = kReportSchema;
      doc["grassmannian"] = spec.label();
      doc["start_key"] = canonical_key(start).hex();
      doc["report"] = j;
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      std::cout << "grassmannian,classification,class_size,max_weight_seen,infinite_witness,"
                   "type_name,explored\n";
      std::string witness;
      if (report.infinite_witness) {
        for (Vertex v : report.infinite_witness->vertices) {
          witness += (witness.empty() ? "" : " ") + std::to_string(v);
        }
      }
      std::cout << '"' << spec.label() << "\"," << to_string(report.classification) << ','
                << (report.class_size ? std::to_string(*report.class_size) : "") << ','
                << report.max_weight_seen << ',' << witness << ",\""
                << report.type_name.value_or("") << "\"," << report.explored << "\n";
      break;
    }
    case OutputFormat::kMarkdown: {
      std::cout << "| field | value |\n|---|---|\n";
      std::cout << "| grassmannian | " << spec.label() << " |\n";
      for (const auto& [key, value] : j.items()) std::cout << "| " << key << " | " << value.dump() << " |\n";
      break;
    }
  }
  return report.classification == Classification::kInconclusive ? kExitInconclusive : 0;
}

int cmd_verify(const CommonFlags& flags, int claim_bound, int trichotomy_bound) {
  auto cache = open_cache(flags);
  VerifyOptions options;
  options.cap = flags.cap;
  options.workers = flags.workers;
  options.cache = cache.get();
  options.claim_bound = claim_bound;
  options.trichotomy_bound = trichotomy_bound;
  bool all = true;
  for (const auto& result : verify_all(options)) {
    std::cout << format_result(result) << "\n";
    all = all && result.passed;
  }
  return all ? 0 : 1;
}

// Randomized spot checks of the quiver and canonical-form invariants.
int cmd_selfcheck(std::uint64_t seed, std::size_t cases) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Arrow> arrows;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        const auto w = static_cast<Weight>(rng() % 7) - 3;
        if (w != 0) arrows.push_back({i, j, w});
      }
    }
    const ExchangeMatrix m = ExchangeMatrix::from_arrows(n, arrows);
    std::vector<Vertex> sigma(n);
    for (Vertex v = 0; v < n; ++v) sigma[v] = v;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const Vertex k = rng() % n;
    const ExchangeMatrix moved = m.permuted(sigma);
    bool ok = m.mutate(k).mutate(k) == m;
    ok = ok && moved.mutate(sigma[k]) == m.mutate(k).permuted(sigma);
    ok = ok && canonical_key(m) == canonical_key(moved);
    if (!ok) {
      ++failures;
      std::cout << "FAIL case " << c << ": " << serialize(m) << " k=" << k << "\n";
    }
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " selfcheck seed=" << seed
            << " cases=" << cases << " failures=" << failures << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation-type classification of Gr(p,p+q) against the regular tilings {p,q}"};
  app.require_subcommand(1);

  int p = 0;
  int q = 0;
  int pmax = 7;
  int qmax = 7;
  int claim_bound = 12;
  int trichotomy_bound = 50;
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  std::string quiver_format = "json";
  CommonFlags flags;

  auto* classify = app.add_subcommand("classify", "Classify one cell on both sides");
  classify->add_option("--p", p, "Subspace dimension / polygon size")->required()->check(CLI::Range(2, 1000));
  classify->add_option("--q", q, "Codimension / vertex valence")->required()->check(CLI::Range(2, 1000));
  add_common(classify, flags);

  auto* table = app.add_subcommand("table", "Classify every cell 2<=p<=pmax, 2<=q<=qmax");
  table->add_option("--pmax", pmax, "Largest p")->check(CLI::Range(2, 1000));
  table->add_option("--qmax", qmax, "Largest q")->check(CLI::Range(2, 1000));
  add_common(table, flags);

  auto* quiver = app.add_subcommand("quiver", "Print the initial quiver of Gr(p,p+q)");
  quiver->add_option("--p", p)->required()->check(CLI::Range(2, 1000));
  quiver->add_option("--q", q)->required()->check(CLI::Range(2, 1000));
  quiver->add_option("--format", quiver_format)->check(CLI::IsMember({"json", "dot"}));

  auto* explore = app.add_subcommand("explore", "Explore the mutation class of Gr(p,p+q)");
  explore->add_option("--p", p)->required()->check(CLI::Range(2, 1000));
  explore->add_option("--q", q)->required()->check(CLI::Range(2, 1000));
  add_common(explore, flags);

  auto* verify = app.add_subcommand("verify", "Reproduce the tables and check the correspondence");
  verify->add_option("--claim-bound", claim_bound, "Cells checked for the main claim and duality")
      ->check(CLI::Range(2, 1000));
  verify->add_option("--trichotomy-bound", trichotomy_bound, "Symbols checked for the trichotomy")
      ->check(CLI::Range(2, 100000));
  add_common(verify, flags);

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized mutation/canonical-form checks");
  selfcheck->add_option("--seed", seed, "Random seed");
  selfcheck->add_option("--cases", cases, "Number of random quivers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(p, q, flags);
    if (*table) return cmd_table(pmax, qmax, flags);
    if (*quiver) return cmd_quiver(p, q, quiver_format);
    if (*explore) return cmd_explore(p, q, flags);
    if (*verify) return cmd_verify(flags, claim_bound, trichotomy_bound);
    if (*selfcheck) return cmd_selfcheck(seed, cases);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
