#pragma once

#include <filesystem>
#include <mutex>
#include <optional>

#include "atlas/explorer.hpp"

namespace atlas {

inline constexpr const char* kCacheSchema = "atlas-class-cache/1";

/// On-disk cache of explored mutation classes, one JSON file per canonical
/// key of the starting quiver (<dir>/<key-hex>.json, or
/// <dir>/sha256-<digest of key bytes>.json when the hex exceeds 200 chars):
///
///   {"schema": "atlas-class-cache/1",
///    "start_key": "<hex>",
///    "members": ["<hex>", ...],          // sorted; empty unless closed
///    "entries": [{"start": [[...]], "cap": N, "report": {...}}, ...]}
///
/// Entries are per exact starting matrix and cap, so a hit returns the
/// report a recomputation would produce. Unreadable files are reported on
/// stderr and treated as misses.
class ClassCache {
 public:
  explicit ClassCache(std::filesystem::path dir);

  std::optional<MutationClass> load(const ExchangeMatrix& start, std::size_t cap) const;
  void store(const ExchangeMatrix& start, std::size_t cap, const MutationClass& cls);

  std::filesystem::path path_for(const QuiverKey& key) const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

/// explore_class, served from / written to `cache` when it is non-null.
MutationClass explore_cached(const ExchangeMatrix& start, const ExploreOptions& options,
                             ClassCache* cache, bool* hit = nullptr);

}  // namespace atlas
