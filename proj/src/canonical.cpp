#include "atlas/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "atlas/error.hpp"

namespace atlas {

namespace {

using Color = std::int64_t;

struct Adjacency {
  explicit Adjacency(const ExchangeMatrix& m) : neighbors(m.size()) {
    for (Vertex v = 0; v < m.size(); ++v) {
      for (Vertex u = 0; u < m.size(); ++u) {
        if (m(v, u) != 0) neighbors[v].emplace_back(u, m(v, u));
      }
    }
  }
  std::vector<std::vector<std::pair<Vertex, Weight>>> neighbors;
};

// Replaces colors by dense ranks of (color, sorted multiset of
// (neighbor color, signed weight)) until the partition stops splitting.
// Rank order refines the incoming color order, so the result is an
// isomorphism-invariant ordered partition.
void refine(const Adjacency& adj, std::vector<Color>& color) {
  const std::size_t n = color.size();
  std::vector<std::vector<Color>> signature(n);
  std::vector<Vertex> order(n);
  std::size_t cells = 0;
  {
    std::vector<Color> distinct = color;
    std::sort(distinct.begin(), distinct.end());
    cells = std::unique(distinct.begin(), distinct.end()) - distinct.begin();
  }
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::pair<Color, Weight>> around;
      around.reserve(adj.neighbors[v].size());
      for (auto [u, w] : adj.neighbors[v]) around.emplace_back(color[u], w);
      std::sort(around.begin(), around.end());
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(color[v]);
      for (auto [c, w] : around) {
        sig.push_back(c);
        sig.push_back(w);
      }
    }
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
    std::size_t next_cells = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++next_cells;
      color[order[i]] = static_cast<Color>(next_cells);
    }
    ++next_cells;
    if (next_cells == cells) return;
    cells = next_cells;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ExchangeMatrix& m) : m_(m), adj_(m) {}

  CanonicalForm run() {
    std::vector<Color> color(m_.size(), 0);
    std::vector<Vertex> prefix;
    search(std::move(color), prefix);
    return {encode(best_), best_label_};
  }

 private:
  void search(std::vector<Color> color, std::vector<Vertex>& prefix) {
    refine(adj_, color);
    const std::size_t n = color.size();
    // Target cell: the lowest color shared by more than one vertex.
    std::vector<std::size_t> count(n, 0);
    for (Color c : color) ++count[static_cast<std::size_t>(c)];
    std::size_t target = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == n) {
      leaf(color);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (static_cast<std::size_t>(color[v]) != target) continue;
      if (equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      std::vector<Color> child(n);
      for (Vertex x = 0; x < n; ++x) child[x] = 2 * color[x] + (x == v ? 0 : 1);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // v is skipped when an automorphism fixing the prefix maps a tried vertex to it.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried,
                           const std::vector<Vertex>& prefix) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<const std::vector<Vertex>*> usable;
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return g[p] == p; });
      if (fixes) usable.push_back(&g);
    }
    if (usable.empty()) return false;
    std::vector<bool> in_orbit(m_.size(), false);
    std::vector<Vertex> orbit{v};
    in_orbit[v] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto* g : usable) {
        const Vertex image = (*g)[orbit[head]];
        if (!in_orbit[image]) {
          in_orbit[image] = true;
          orbit.push_back(image);
        }
      }
    }
    return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return in_orbit[t]; });
  }

  void leaf(const std::vector<Color>& color) {
    const std::size_t n = m_.size();
    std::vector<Vertex> label(n);
    std::vector<Vertex> inverse(n);
    for (Vertex v = 0; v < n; ++v) {
      label[v] = static_cast<Vertex>(color[v]);
      inverse[label[v]] = v;
    }
    std::vector<Weight> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) upper.push_back(m_(inverse[a], inverse[b]));
    }
    if (!have_best_ || upper < best_) {
      best_ = std::move(upper);
      best_label_ = std::move(label);
      best_inverse_ = std::move(inverse);
      have_best_ = true;
      return;
    }
    if (upper == best_) {
      std::vector<Vertex> gamma(n);
      bool identity = true;
      for (Vertex v = 0; v < n; ++v) {
        gamma[v] = best_inverse_[label[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  QuiverKey encode(const std::vector<Weight>& upper) const {
    QuiverKey key;
    key.n = m_.size();
    const auto n32 = static_cast<std::uint32_t>(key.n);
    for (int shift = 24; shift >= 0; shift -= 8) {
      key.bytes.push_back(static_cast<char>((n32 >> shift) & 0xFF));
    }
    for (Weight w : upper) {
      std::uint64_t z = (static_cast<std::uint64_t>(w) << 1) ^ static_cast<std::uint64_t>(w >> 63);
      do {
        std::uint8_t byte = z & 0x7F;
        z >>= 7;
        if (z) byte |= 0x80;
        key.bytes.push_back(static_cast<char>(byte));
      } while (z);
    }
    return key;
  }

  const ExchangeMatrix& m_;
  Adjacency adj_;
  bool have_best_ = false;
  std::vector<Weight> best_;
  std::vector<Vertex> best_label_;
  std::vector<Vertex> best_inverse_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

std::string QuiverKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

QuiverKey QuiverKey::from_hex(std::string_view hex) {
  auto nibble = [&](std::size_t pos) -> int {
    const char c = hex[pos];
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError(pos, "expected lowercase hex digit");
  };
  if (hex.size() % 2 != 0) throw ParseError(hex.size(), "odd-length hex key");
  QuiverKey key;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    key.bytes.push_back(static_cast<char>(nibble(i) * 16 + nibble(i + 1)));
  }
  if (key.bytes.size() < 4) throw ParseError(0, "key shorter than its header");
  for (int i = 0; i < 4; ++i) key.n = key.n * 256 + static_cast<unsigned char>(key.bytes[i]);
  return key;
}

CanonicalForm canonical_form(const ExchangeMatrix& m) { return CanonicalSearch(m).run(); }

ExchangeMatrix matrix_from_key(const QuiverKey& key) {
  const std::size_t n = key.n;
  std::vector<Arrow> arrows;
  std::size_t pos = 4;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint64_t z = 0;
      int shift = 0;
      for (;;) {
        if (pos >= key.bytes.size()) throw ParseError(pos, "truncated key");
        const auto byte = static_cast<unsigned char>(key.bytes[pos++]);
        z |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
        shift += 7;
        if (!(byte & 0x80)) break;
        if (shift > 63) throw ParseError(pos, "varint too long");
      }
      const auto w = static_cast<Weight>((z >> 1) ^ (~(z & 1) + 1));
      if (w != 0) arrows.push_back({a, b, w});
    }
  }
  if (pos != key.bytes.size()) throw ParseError(pos, "trailing bytes in key");
  return ExchangeMatrix::from_arrows(n, arrows);
}

bool is_isomorphic(const ExchangeMatrix& m1, const ExchangeMatrix& m2) {
  if (m1.size() != m2.size()) return false;
  return canonical_key(m1) == canonical_key(m2);
}

}  // namespace atlas
