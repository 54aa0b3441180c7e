#include "atlas/exchange_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kNotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::kEmptyMatrix: return "EmptyMatrix";
    case Errc::kNotSquare: return "NotSquare";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kOverflow: return "Overflow";
    case Errc::kParseError: return "ParseError";
    case Errc::kCapZero: return "CapZero";
    case Errc::kInvalidSpec: return "InvalidSpec";
    case Errc::kNotSpherical: return "NotSpherical";
    case Errc::kNoTreeRepresentative: return "NoTreeRepresentative";
    case Errc::kCacheCorrupt: return "CacheCorrupt";
  }
  return "Unknown";
}

namespace {

Weight checked_mul(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::kOverflow, "exchange matrix entry overflow in mutation");
  }
  return out;
}

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::kOverflow, "exchange matrix entry overflow in mutation");
  }
  return out;
}

Weight checked_neg(Weight a) {
  if (a == INT64_MIN) throw Error(Errc::kOverflow, "cannot negate INT64_MIN");
  return -a;
}

}  // namespace

ExchangeMatrix ExchangeMatrix::from_matrix(const std::vector<std::vector<Weight>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::kEmptyMatrix, "exchange matrix has no vertices");
  std::vector<Weight> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(Errc::kNotSquare, "row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  ExchangeMatrix m(n, std::move(entries));
  m.validate();
  return m;
}

ExchangeMatrix ExchangeMatrix::from_arrows(std::size_t n, std::span<const Arrow> arrows) {
  if (n == 0) throw Error(Errc::kEmptyMatrix, "exchange matrix has no vertices");
  std::vector<Weight> entries(n * n, 0);
  for (const Arrow& a : arrows) {
    if (a.from >= n || a.to >= n) {
      throw Error(Errc::kVertexOutOfRange, "arrow endpoint outside [0," + std::to_string(n) + ")");
    }
    if (a.from == a.to) throw Error(Errc::kNotSkewSymmetric, "loops are not allowed");
    entries[a.from * n + a.to] = checked_add(entries[a.from * n + a.to], a.multiplicity);
    entries[a.to * n + a.from] = checked_add(entries[a.to * n + a.from], checked_neg(a.multiplicity));
  }
  return ExchangeMatrix(n, std::move(entries));
}

ExchangeMatrix ExchangeMatrix::zero(std::size_t n) {
  if (n == 0) throw Error(Errc::kEmptyMatrix, "exchange matrix has no vertices");
  return ExchangeMatrix(n, std::vector<Weight>(n * n, 0));
}

void ExchangeMatrix::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0) {
      throw Error(Errc::kNotSkewSymmetric, "nonzero diagonal entry at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Weight a = (*this)(i, j);
      const Weight b = (*this)(j, i);
      if (a == INT64_MIN || a != -b) {
        throw Error(Errc::kNotSkewSymmetric, "b(" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") != -b(" + std::to_string(j) + "," +
                                                 std::to_string(i) + ")");
      }
    }
  }
}

std::vector<std::vector<Weight>> ExchangeMatrix::to_rows() const {
  std::vector<std::vector<Weight>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

ExchangeMatrix ExchangeMatrix::mutate(Vertex k) const {
  if (k >= n_) {
    throw Error(Errc::kVertexOutOfRange,
                "mutation vertex " + std::to_string(k) + " outside [0," + std::to_string(n_) + ")");
  }
  std::vector<Weight> out = b_;
  // Only paths i -> k -> j (or j -> k -> i) change b(i,j).
  std::vector<Vertex> in;
  std::vector<Vertex> outgoing;
  for (Vertex v = 0; v < n_; ++v) {
    const Weight w = (*this)(v, k);
    if (w > 0) in.push_back(v);
    if (w < 0) outgoing.push_back(v);
  }
  for (Vertex i : in) {
    for (Vertex j : outgoing) {
      const Weight delta = checked_mul((*this)(i, k), (*this)(k, j));
      out[i * n_ + j] = checked_add(out[i * n_ + j], delta);
      out[j * n_ + i] = checked_add(out[j * n_ + i], checked_neg(delta));
    }
  }
  for (Vertex v = 0; v < n_; ++v) {
    out[k * n_ + v] = checked_neg(out[k * n_ + v]);
    out[v * n_ + k] = checked_neg(out[v * n_ + k]);
  }
  return ExchangeMatrix(n_, std::move(out));
}

Weight ExchangeMatrix::max_weight() const noexcept {
  Weight best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Weight w = (*this)(i, j);
      best = std::max(best, w < 0 ? -w : w);
    }
  }
  return best;
}

std::size_t ExchangeMatrix::arrow_pair_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) count += (*this)(i, j) != 0 ? 1 : 0;
  }
  return count;
}

ExchangeMatrix ExchangeMatrix::permuted(std::span<const Vertex> sigma) const {
  if (sigma.size() != n_) {
    throw Error(Errc::kVertexOutOfRange, "permutation length does not match vertex count");
  }
  std::vector<bool> seen(n_, false);
  for (Vertex v : sigma) {
    if (v >= n_ || seen[v]) throw Error(Errc::kVertexOutOfRange, "not a permutation");
    seen[v] = true;
  }
  std::vector<Weight> out(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[sigma[i] * n_ + sigma[j]] = (*this)(i, j);
  }
  return ExchangeMatrix(n_, std::move(out));
}

ExchangeMatrix ExchangeMatrix::induced(std::span<const Vertex> vertices) const {
  const std::size_t m = vertices.size();
  if (m == 0) throw Error(Errc::kEmptyMatrix, "induced subquiver on no vertices");
  std::vector<Weight> out(m * m, 0);
  std::vector<bool> used(n_, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (vertices[i] >= n_) throw Error(Errc::kVertexOutOfRange, "induced vertex out of range");
    if (used[vertices[i]]) throw Error(Errc::kInvalidSpec, "induced vertex repeated");
    used[vertices[i]] = true;
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] = (*this)(vertices[i], vertices[j]);
  }
  return ExchangeMatrix(m, std::move(out));
}

std::vector<std::vector<Vertex>> ExchangeMatrix::components() const {
  std::vector<std::vector<Vertex>> result;
  std::vector<bool> seen(n_, false);
  for (Vertex root = 0; root < n_; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const Vertex v = comp[head];
      for (Vertex u = 0; u < n_; ++u) {
        if (!seen[u] && (*this)(v, u) != 0) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

ExchangeMatrix replay(const ExchangeMatrix& start, const MutationSequence& sequence) {
  ExchangeMatrix m = start;
  for (Vertex k : sequence.vertices) m = m.mutate(k);
  return m;
}

std::string serialize(const ExchangeMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(m(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

namespace {

class MatrixParser {
 public:
  explicit MatrixParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<Weight>> parse() {
    std::vector<std::vector<Weight>> rows;
    expect('[');
    skip_ws();
    if (peek() == ']') {
      ++pos_;
    } else {
      for (;;) {
        rows.push_back(parse_row());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters");
    return rows;
  }

 private:
  std::vector<Weight> parse_row() {
    std::vector<Weight> row;
    expect('[');
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return row;
    }
    for (;;) {
      row.push_back(parse_int());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return row;
    }
  }

  Weight parse_int() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (text_.substr(pos_, 3) == "\xE2\x88\x92") {  // U+2212
      negative = true;
      pos_ += 3;
    }
    const std::size_t start = pos_;
    Weight value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Weight digit = text_[pos_] - '0';
      if (__builtin_mul_overflow(value, Weight{10}, &value) ||
          __builtin_sub_overflow(value, digit, &value)) {
        throw ParseError(start, "integer out of 64-bit range");
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected integer");
    // Accumulated as a negative number so INT64_MIN parses.
    if (!negative) {
      if (value == INT64_MIN) throw ParseError(start, "integer out of 64-bit range");
      value = -value;
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExchangeMatrix deserialize(std::string_view text) {
  return ExchangeMatrix::from_matrix(MatrixParser(text).parse());
}

std::string to_dot(const ExchangeMatrix& m, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (std::size_t v = 0; v < m.size(); ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Weight w = m(i, j);
      if (w > 0) out << "  " << i << " -> " << j << " [label=\"" << w << "\"];\n";
      if (w < 0) out << "  " << j << " -> " << i << " [label=\"" << -w << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace atlas
