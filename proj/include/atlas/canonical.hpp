#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/exchange_matrix.hpp"

namespace atlas {

/// Canonical byte string of a quiver up to vertex relabeling.
///
/// Layout: vertex count as 4 big-endian bytes, then the strict upper triangle
/// of the canonically relabeled exchange matrix in row-major order, each
/// entry zigzag-encoded as an unsigned LEB128 varint.
struct QuiverKey {
  std::string bytes;
  std::size_t n = 0;

  std::string hex() const;
  static QuiverKey from_hex(std::string_view hex);

  friend bool operator==(const QuiverKey&, const QuiverKey&) = default;
  friend auto operator<=>(const QuiverKey& a, const QuiverKey& b) { return a.bytes <=> b.bytes; }
};

struct QuiverKeyHash {
  std::size_t operator()(const QuiverKey& key) const noexcept {
    return std::hash<std::string>{}(key.bytes);
  }
};

struct CanonicalForm {
  QuiverKey key;
  /// labeling[v] is the canonical position of input vertex v.
  std::vector<Vertex> labeling;
};

/// Weighted-degree partition refinement followed by a backtracking search
/// over individualizations, pruned with the automorphisms it discovers.
/// Among the labelings compatible with the refined ordered partition, the
/// one with lexicographically smallest row-major upper triangle is chosen.
CanonicalForm canonical_form(const ExchangeMatrix& m);

inline QuiverKey canonical_key(const ExchangeMatrix& m) { return canonical_form(m).key; }

/// Decodes a key back into the canonical representative.
ExchangeMatrix matrix_from_key(const QuiverKey& key);

/// True iff some relabeling maps m1 onto m2 (arrow directions preserved).
bool is_isomorphic(const ExchangeMatrix& m1, const ExchangeMatrix& m2);

}  // namespace atlas
