#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

using Vertex = std::size_t;
using Weight = std::int64_t;

/// Signed multiplicity of arrows between two vertices of a quiver.
struct Arrow {
  Vertex from;
  Vertex to;
  Weight multiplicity = 1;
};

/// Ordered list of mutation vertices (0-based), applied left to right.
struct MutationSequence {
  std::vector<Vertex> vertices;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
};

/// Skew-symmetric integer exchange matrix of a quiver.
///
/// b(i, j) is the number of arrows i -> j minus the number of arrows j -> i.
/// Instances are immutable once constructed; every factory validates
/// skew-symmetry and a zero diagonal, and all arithmetic is overflow-checked.
class ExchangeMatrix {
 public:
  /// Throws Error{kEmptyMatrix} for an empty grid, Error{kNotSquare} for a
  /// ragged one and Error{kNotSkewSymmetric} if b(i,j) != -b(j,i).
  static ExchangeMatrix from_matrix(const std::vector<std::vector<Weight>>& rows);
  static ExchangeMatrix from_arrows(std::size_t n, std::span<const Arrow> arrows);
  static ExchangeMatrix zero(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Weight operator()(Vertex i, Vertex j) const noexcept { return b_[i * n_ + j]; }
  std::span<const Weight> row(Vertex i) const noexcept {
    return {b_.data() + i * n_, n_};
  }
  std::vector<std::vector<Weight>> to_rows() const;

  /// Matrix mutation at k. Throws Error{kVertexOutOfRange} or Error{kOverflow}.
  ExchangeMatrix mutate(Vertex k) const;

  /// max over i<j of |b(i,j)|.
  Weight max_weight() const noexcept;

  /// Number of unordered pairs {i,j} with b(i,j) != 0.
  std::size_t arrow_pair_count() const noexcept;

  /// Relabels vertex v as sigma[v]. sigma must be a permutation of [0,n).
  ExchangeMatrix permuted(std::span<const Vertex> sigma) const;

  /// Full subquiver on the given vertices; vertex i of the result is vertices[i].
  ExchangeMatrix induced(std::span<const Vertex> vertices) const;

  /// Connected components of the underlying graph, each sorted, ordered by
  /// smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected() const { return components().size() == 1; }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  ExchangeMatrix(std::size_t n, std::vector<Weight> entries)
      : n_(n), b_(std::move(entries)) {}

  void validate() const;

  std::size_t n_ = 0;
  std::vector<Weight> b_;
};

inline ExchangeMatrix mutate(const ExchangeMatrix& m, Vertex k) { return m.mutate(k); }
inline Weight max_weight(const ExchangeMatrix& m) { return m.max_weight(); }

/// Applies the sequence in order. Throws Error{kVertexOutOfRange}.
ExchangeMatrix replay(const ExchangeMatrix& start, const MutationSequence& sequence);

/// Compact JSON array-of-arrays, e.g. "[[0,1],[-1,0]]". No whitespace.
std::string serialize(const ExchangeMatrix& m);

/// Accepts any whitespace and both '-' and U+2212 as the minus sign.
/// Throws ParseError (with byte offset) or the validation errors of from_matrix.
ExchangeMatrix deserialize(std::string_view text);

/// Graphviz digraph with one labeled edge per arrow pair, oriented along the
/// positive entry.
std::string to_dot(const ExchangeMatrix& m, std::string_view graph_name = "quiver");

}  // namespace atlas
