#include "atlas/class_cache.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "atlas/error.hpp"
#include "atlas/report_json.hpp"

namespace atlas {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Longest key hex used verbatim as a file name; longer keys are hashed.
constexpr std::size_t kMaxHexName = 200;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::kCacheCorrupt, "sha256 failed");
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kDigits[digest[i] >> 4];
    out += kDigits[digest[i] & 15];
  }
  return out;
}

std::optional<json> read_document(const std::filesystem::path& path, const QuiverKey& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (!doc.is_object() || doc.value("schema", "") != kCacheSchema) {
      throw Error(Errc::kCacheCorrupt, "missing or unknown schema");
    }
    if (doc.at("start_key").get<std::string>() != key.hex()) {
      throw Error(Errc::kCacheCorrupt, "start_key does not match the file name");
    }
    for (const auto& entry : doc.at("entries")) {
      (void)matrix_from_json(entry.at("start"));
      (void)report_from_json(entry.at("report"));
      (void)entry.at("cap").get<std::size_t>();
    }
    for (const auto& member : doc.at("members")) (void)QuiverKey::from_hex(member.get<std::string>());
    return doc;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring corrupt cache file " << path.string() << ": " << e.what()
              << "\n";
    return std::nullopt;
  }
}

}  // namespace

ClassCache::ClassCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ClassCache::path_for(const QuiverKey& key) const {
  std::string hex = key.hex();
  if (hex.size() > kMaxHexName) hex = "sha256-" + sha256_hex(key.bytes);
  return dir_ / (hex + ".json");
}

std::optional<MutationClass> ClassCache::load(const ExchangeMatrix& start, std::size_t cap) const {
  std::lock_guard lock(mutex_);
  const QuiverKey key = canonical_key(start);
  const auto doc = read_document(path_for(key), key);
  if (!doc) return std::nullopt;
  for (const auto& entry : doc->at("entries")) {
    if (entry.at("cap").get<std::size_t>() != cap) continue;
    if (matrix_from_json(entry.at("start")) != start) continue;
    MutationClass cls;
    cls.report = report_from_json(entry.at("report"));
    if (cls.report.class_size) {
      for (const auto& member : doc->at("members")) {
        cls.members.push_back(QuiverKey::from_hex(member.get<std::string>()));
      }
    }
    return cls;
  }
  return std::nullopt;
}

void ClassCache::store(const ExchangeMatrix& start, std::size_t cap, const MutationClass& cls) {
  std::lock_guard lock(mutex_);
  const QuiverKey key = canonical_key(start);
  const auto path = path_for(key);
  std::filesystem::create_directories(dir_);

  std::vector<std::string> members;
  std::vector<std::pair<std::string, ordered_json>> entries;  // sort key, entry
  if (auto doc = read_document(path, key)) {
    for (const auto& m : doc->at("members")) members.push_back(m.get<std::string>());
    for (const auto& e : doc->at("entries")) {
      const ExchangeMatrix s = matrix_from_json(e.at("start"));
      const auto c = e.at("cap").get<std::size_t>();
      if (s == start && c == cap) continue;
      ordered_json copy;
      copy["start"] = to_json(s);
      copy["cap"] = c;
      copy["report"] = to_json(report_from_json(e.at("report")));
      entries.emplace_back(serialize(s) + "#" + std::to_string(c), std::move(copy));
    }
  }
  if (members.empty() && !cls.members.empty()) {
    for (const auto& m : cls.members) members.push_back(m.hex());
  }
  ordered_json entry;
  entry["start"] = to_json(start);
  entry["cap"] = cap;
  entry["report"] = to_json(cls.report);
  entries.emplace_back(serialize(start) + "#" + std::to_string(cap), std::move(entry));
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  ordered_json doc;
  doc["schema"] = kCacheSchema;
  doc["start_key"] = key.hex();
  doc["members"] = members;
  doc["entries"] = ordered_json::array();
  for (auto& [sort_key, e] : entries) doc["entries"].push_back(std::move(e));

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

MutationClass explore_cached(const ExchangeMatrix& start, const ExploreOptions& options,
                             ClassCache* cache, bool* hit) {
  if (hit) *hit = false;
  if (options.cap == 0) throw Error(Errc::kCapZero, "exploration cap must be at least 1");
  if (cache) {
    if (auto cached = cache->load(start, options.cap)) {
      if (hit) *hit = true;
      return *cached;
    }
  }
  MutationClass cls = explore_class(start, options);
  if (cache) cache->store(start, options.cap, cls);
  return cls;
}

}  // namespace atlas
