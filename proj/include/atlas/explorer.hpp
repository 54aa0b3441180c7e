#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/canonical.hpp"
#include "atlas/exchange_matrix.hpp"

namespace atlas {

enum class Classification {
  kFiniteType,
  kFiniteMutationType,
  kInfiniteMutationType,
  kInconclusive,
};

std::string_view to_string(Classification c);
std::optional<Classification> classification_from_string(std::string_view text);

inline constexpr std::size_t kDefaultCap = 1'000'000;
inline constexpr std::size_t kWalkStepsPerVertex = 1000;
inline constexpr std::string_view kUnnamedFiniteMutation = "unnamed-finite-mutation";

struct MutationClassReport {
  Classification classification = Classification::kInconclusive;
  /// Number of non-isomorphic quivers; present iff the class was closed.
  std::optional<std::size_t> class_size;
  Weight max_weight_seen = 0;
  /// Present iff classification is kInfiniteMutationType.
  std::optional<MutationSequence> infinite_witness;
  std::optional<std::string> type_name;
  /// Canonical forms visited by the class search.
  std::size_t explored = 0;

  friend bool operator==(const MutationClassReport&, const MutationClassReport&) = default;
};

/// A fully enumerated mutation class together with its report.
struct MutationClass {
  MutationClassReport report;
  /// Sorted member keys; empty unless the class was closed.
  std::vector<QuiverKey> members;
};

/// Names mutation classes by membership of a reference seed.
class TypeRegistry {
 public:
  void add(const ExchangeMatrix& seed, std::string name);
  /// Returns the name of the first entry whose seed key is in `members`.
  std::optional<std::string> lookup(std::span<const QuiverKey> sorted_members) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    QuiverKey seed_key;
    std::string name;
  };
  std::vector<Entry> entries_;
};

struct ExploreOptions {
  std::size_t cap = kDefaultCap;
  /// 0 selects hardware concurrency. Results do not depend on this value.
  std::size_t workers = 1;
  const TypeRegistry* registry = nullptr;
  /// Budget of seeded random mutation steps spent looking for a weight >= 3
  /// witness before the class search; defaults to kWalkStepsPerVertex * n.
  /// 0 leaves witness detection to the class search alone.
  std::optional<std::size_t> walk_steps;
};

/// Seeded witness walks, then breadth-first closure of the mutation class of
/// `start` deduplicated by canonical key. Throws Error{kCapZero} when cap is 0; propagates
/// Error{kOverflow} from mutation.
MutationClass explore_class(const ExchangeMatrix& start, const ExploreOptions& options = {});

inline MutationClassReport explore(const ExchangeMatrix& start, const ExploreOptions& options = {}) {
  return explore_class(start, options).report;
}

/// Dynkin name ("A4", "D5", "E6", ...) of a finite-type class, found from a
/// member whose connected components are simply-laced trees of A/D/E shape.
/// Disconnected classes are named per component and joined with 'x'.
/// Throws Error{kNoTreeRepresentative}.
std::string name_finite_type(std::span<const ExchangeMatrix> members);

/// Registry name of a closed finite-mutation class, or "unnamed-finite-mutation".
std::string name_finite_mutation_type(std::span<const QuiverKey> sorted_members,
                                      const TypeRegistry& registry);

/// True iff some pair inside a connected component of at least three
/// vertices carries weight >= 3.
bool has_infinite_witness_weight(const ExchangeMatrix& m);

}  // namespace atlas
