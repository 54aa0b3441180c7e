#include "atlas/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <random>
#include <thread>
#include <unordered_map>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kFiniteType: return "FiniteType";
    case Classification::kFiniteMutationType: return "FiniteMutationType";
    case Classification::kInfiniteMutationType: return "InfiniteMutationType";
    case Classification::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<Classification> classification_from_string(std::string_view text) {
  for (auto c : {Classification::kFiniteType, Classification::kFiniteMutationType,
                 Classification::kInfiniteMutationType, Classification::kInconclusive}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

void TypeRegistry::add(const ExchangeMatrix& seed, std::string name) {
  entries_.push_back({canonical_key(seed), std::move(name)});
}

std::optional<std::string> TypeRegistry::lookup(std::span<const QuiverKey> sorted_members) const {
  for (const Entry& e : entries_) {
    if (std::binary_search(sorted_members.begin(), sorted_members.end(), e.seed_key)) return e.name;
  }
  return std::nullopt;
}

namespace {

// Vertices lying in a connected component with at least three vertices.
// Components are preserved by mutation, so this is fixed along a search.
std::vector<bool> large_component_mask(const ExchangeMatrix& m) {
  std::vector<bool> mask(m.size(), false);
  for (const auto& comp : m.components()) {
    if (comp.size() >= 3) {
      for (Vertex v : comp) mask[v] = true;
    }
  }
  return mask;
}

bool has_witness_weight(const ExchangeMatrix& m, const std::vector<bool>& large) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!large[i]) continue;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Weight w = m(i, j);
      if (w >= 3 || w <= -3) return true;
    }
  }
  return false;
}

std::size_t resolve_workers(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

struct Node {
  std::size_t parent;
  Vertex via;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
constexpr std::uint64_t kWalkSeed = 0x5EED'C1A5'7E12'A7A5ULL;

// Result of expanding one frontier quiver: for each mutation vertex, either
// a witness marker or the canonical key of the child.
struct Expansion {
  std::vector<std::optional<QuiverKey>> child_keys;  // nullopt == witness
};

class ClassSearch {
 public:
  ClassSearch(const ExchangeMatrix& start, std::size_t cap, std::size_t workers)
      : start_(start), cap_(cap), workers_(workers), large_(large_component_mask(start)) {}

  MutationClass run() {
    MutationClass result;
    MutationClassReport& report = result.report;
    const std::size_t n = start_.size();
    report.max_weight_seen = start_.max_weight();

    if (has_witness_weight(start_, large_)) {
      report.classification = Classification::kInfiniteMutationType;
      report.infinite_witness = MutationSequence{};
      report.explored = 0;
      return result;
    }

    nodes_.push_back({kNoParent, 0});
    seen_.emplace(canonical_key(start_), 0);
    std::vector<ExchangeMatrix> frontier{start_};
    std::size_t frontier_first = 0;  // node index of frontier[0]

    while (!frontier.empty()) {
      std::vector<ExchangeMatrix> next;
      const std::size_t next_first = nodes_.size();
      for (std::size_t chunk = 0; chunk < frontier.size(); chunk += kChunk) {
        const std::size_t chunk_end = std::min(frontier.size(), chunk + kChunk);
        std::vector<Expansion> expansions = expand(frontier, frontier_first, chunk, chunk_end);
        for (std::size_t f = chunk; f < chunk_end; ++f) {
          const std::size_t node = frontier_first + f;
          const Expansion& ex = expansions[f - chunk];
          for (Vertex k = 0; k < n; ++k) {
            if (k < ex.child_keys.size() && ex.child_keys[k].has_value()) {
              if (nodes_[node].parent != kNoParent && k == nodes_[node].via) continue;
              auto [it, inserted] = seen_.try_emplace(*ex.child_keys[k], nodes_.size());
              if (!inserted) continue;
              if (seen_.size() > cap_) {
                seen_.erase(it);
                report.classification = Classification::kInconclusive;
                report.explored = seen_.size();
                return result;
              }
              nodes_.push_back({node, k});
              next.push_back(frontier[f].mutate(k));
              report.max_weight_seen = std::max(report.max_weight_seen, next.back().max_weight());
            } else if (k < ex.child_keys.size()) {
              ExchangeMatrix witness = frontier[f].mutate(k);
              report.max_weight_seen = std::max(report.max_weight_seen, witness.max_weight());
              report.classification = Classification::kInfiniteMutationType;
              report.infinite_witness = path_to(node, k);
              report.explored = seen_.size();
              return result;
            }
          }
        }
      }
      frontier = std::move(next);
      frontier_first = next_first;
    }

    report.explored = seen_.size();
    report.class_size = seen_.size();
    report.classification = report.max_weight_seen <= 1 ? Classification::kFiniteType
                                                        : Classification::kFiniteMutationType;
    result.members.reserve(seen_.size());
    for (auto& [key, index] : seen_) result.members.push_back(key);
    std::sort(result.members.begin(), result.members.end());
    return result;
  }

 private:
  static constexpr std::size_t kChunk = 2048;

  std::vector<Expansion> expand(const std::vector<ExchangeMatrix>& frontier,
                                std::size_t frontier_first, std::size_t begin, std::size_t end) {
    std::vector<Expansion> out(end - begin);
    // Items after the earliest witness in this chunk are never merged.
    std::atomic<std::size_t> earliest_witness{end};
    auto work = [&](std::size_t f) {
      if (f > earliest_witness.load(std::memory_order_relaxed)) return;
      const std::size_t node = frontier_first + f;
      const ExchangeMatrix& m = frontier[f];
      Expansion& ex = out[f - begin];
      for (Vertex k = 0; k < m.size(); ++k) {
        if (nodes_[node].parent != kNoParent && k == nodes_[node].via) {
          ex.child_keys.emplace_back(QuiverKey{});
          continue;
        }
        ExchangeMatrix child = m.mutate(k);
        if (has_witness_weight(child, large_)) {
          ex.child_keys.emplace_back(std::nullopt);
          std::size_t cur = earliest_witness.load();
          while (f < cur && !earliest_witness.compare_exchange_weak(cur, f)) {
          }
          return;
        }
        ex.child_keys.emplace_back(canonical_key(child));
      }
    };
    const std::size_t count = end - begin;
    if (workers_ <= 1 || count < 2 * workers_) {
      for (std::size_t f = begin; f < end; ++f) work(f);
      return out;
    }
    std::atomic<std::size_t> cursor{begin};
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers_; ++w) {
        pool.emplace_back([&] {
          for (std::size_t f = cursor++; f < end; f = cursor++) work(f);
        });
      }
    }
    return out;
  }

  MutationSequence path_to(std::size_t node, Vertex last) const {
    MutationSequence seq;
    seq.vertices.push_back(last);
    for (std::size_t cur = node; nodes_[cur].parent != kNoParent; cur = nodes_[cur].parent) {
      seq.vertices.push_back(nodes_[cur].via);
    }
    std::reverse(seq.vertices.begin(), seq.vertices.end());
    return seq;
  }

  const ExchangeMatrix& start_;
  std::size_t cap_;
  std::size_t workers_;
  std::vector<bool> large_;
  std::vector<Node> nodes_;
  std::unordered_map<QuiverKey, std::size_t, QuiverKeyHash> seen_;
};

// Dense in-place copy of an exchange matrix for long mutation walks.
class WorkingMatrix {
 public:
  explicit WorkingMatrix(const ExchangeMatrix& m) : n_(m.size()), b_(m.size() * m.size()) {
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex j = 0; j < n_; ++j) b_[i * n_ + j] = m(i, j);
    }
  }

  // Mutates at k; returns true if a weight >= 3 entry appeared on a pair
  // marked in `large`. Only pairs through k change magnitude.
  bool mutate(Vertex k, const std::vector<bool>& large) {
    in_.clear();
    out_.clear();
    for (Vertex v = 0; v < n_; ++v) {
      const Weight w = b_[v * n_ + k];
      if (w > 0) in_.push_back(v);
      if (w < 0) out_.push_back(v);
    }
    bool witness = false;
    for (Vertex i : in_) {
      for (Vertex j : out_) {
        Weight delta = 0;
        Weight& ij = b_[i * n_ + j];
        if (__builtin_mul_overflow(b_[i * n_ + k], b_[k * n_ + j], &delta) ||
            __builtin_add_overflow(ij, delta, &ij)) {
          throw Error(Errc::kOverflow, "exchange matrix entry overflow in mutation");
        }
        b_[j * n_ + i] = -ij;
        if (large[i] && (ij >= 3 || ij <= -3)) witness = true;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      b_[k * n_ + v] = -b_[k * n_ + v];
      b_[v * n_ + k] = -b_[v * n_ + k];
    }
    return witness;
  }

 private:
  std::size_t n_;
  std::vector<Weight> b_;
  std::vector<Vertex> in_;
  std::vector<Vertex> out_;
};

// Length of the shortest prefix of `seq` whose replay shows a witness
// weight, if any.
std::optional<std::size_t> witness_prefix(const ExchangeMatrix& start, std::span<const Vertex> seq,
                                          const std::vector<bool>& large) {
  WorkingMatrix m(start);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (m.mutate(seq[i], large)) return i + 1;
  }
  return std::nullopt;
}

// Greedy single-deletion shortening until no one mutation can be dropped.
MutationSequence shorten_witness(const ExchangeMatrix& start, std::vector<Vertex> seq,
                                 const std::vector<bool>& large) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < seq.size();) {
      std::vector<Vertex> candidate;
      candidate.reserve(seq.size() - 1);
      candidate.insert(candidate.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
      candidate.insert(candidate.end(), seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.end());
      if (auto len = witness_prefix(start, candidate, large)) {
        candidate.resize(*len);
        seq = std::move(candidate);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return MutationSequence{std::move(seq)};
}

// Seeded random mutation walks (never undoing the previous step). Draws use
// the raw mt19937_64 stream, so results are identical on every platform.
std::optional<MutationSequence> walk_for_witness(const ExchangeMatrix& start, std::size_t steps,
                                                 const std::vector<bool>& large) {
  const std::size_t n = start.size();
  if (n < 3 || steps == 0) return std::nullopt;
  std::mt19937_64 rng(kWalkSeed ^ n);
  const std::size_t walk_length = std::max<std::size_t>(64, 50 * n);
  std::size_t used = 0;
  while (used < steps) {
    WorkingMatrix m(start);
    std::vector<Vertex> seq;
    Vertex previous = n;
    for (std::size_t i = 0; i < walk_length && used < steps; ++i, ++used) {
      Vertex k = previous;
      while (k == previous) k = static_cast<Vertex>(rng() % n);
      seq.push_back(k);
      previous = k;
      if (m.mutate(k, large)) return shorten_witness(start, std::move(seq), large);
    }
  }
  return std::nullopt;
}

struct DynkinTree {
  char series;
  std::size_t rank;
};

// Shape of a connected simply-laced tree on the given vertices, if A/D/E.
std::optional<DynkinTree> dynkin_shape(const ExchangeMatrix& m, std::span<const Vertex> comp) {
  const std::size_t size = comp.size();
  std::vector<std::vector<Vertex>> adj(m.size());
  std::size_t edges = 0;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      const Weight w = m(comp[a], comp[b]);
      if (w == 0) continue;
      if (w != 1 && w != -1) return std::nullopt;
      adj[comp[a]].push_back(comp[b]);
      adj[comp[b]].push_back(comp[a]);
      ++edges;
    }
  }
  if (edges + 1 != size) return std::nullopt;  // connected, so a tree iff |E| = |V|-1
  std::vector<Vertex> branch_points;
  for (Vertex v : comp) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch_points.push_back(v);
  }
  if (branch_points.empty()) return DynkinTree{'A', size};
  if (branch_points.size() > 1) return std::nullopt;
  const Vertex hub = branch_points.front();
  std::vector<std::size_t> arms;
  for (Vertex first : adj[hub]) {
    std::size_t length = 1;
    Vertex prev = hub;
    Vertex cur = first;
    while (adj[cur].size() == 2) {
      const Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinTree{'D', size};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinTree{'E', size};
  return std::nullopt;
}

}  // namespace

bool has_infinite_witness_weight(const ExchangeMatrix& m) {
  return has_witness_weight(m, large_component_mask(m));
}

MutationClass explore_class(const ExchangeMatrix& start, const ExploreOptions& options) {
  if (options.cap == 0) throw Error(Errc::kCapZero, "exploration cap must be at least 1");
  const std::size_t workers = resolve_workers(options.workers);

  const std::vector<bool> large = large_component_mask(start);
  if (!has_witness_weight(start, large)) {
    const std::size_t steps = options.walk_steps.value_or(kWalkStepsPerVertex * start.size());
    if (auto witness = walk_for_witness(start, steps, large)) {
      MutationClass result;
      result.report.classification = Classification::kInfiniteMutationType;
      result.report.max_weight_seen = replay(start, *witness).max_weight();
      result.report.infinite_witness = std::move(witness);
      return result;
    }
  }

  MutationClass result = ClassSearch(start, options.cap, workers).run();
  MutationClassReport& report = result.report;
  if (report.classification == Classification::kFiniteType) {
    std::vector<ExchangeMatrix> members;
    members.reserve(result.members.size());
    for (const QuiverKey& key : result.members) members.push_back(matrix_from_key(key));
    report.type_name = name_finite_type(members);
  } else if (report.classification == Classification::kFiniteMutationType) {
    static const TypeRegistry empty;
    report.type_name = name_finite_mutation_type(
        result.members, options.registry != nullptr ? *options.registry : empty);
  }
  return result;
}

std::string name_finite_type(std::span<const ExchangeMatrix> members) {
  // Components mutate independently, so a finite-type class always has a
  // member that is a Dynkin tree on every component at once.
  for (const ExchangeMatrix& m : members) {
    std::vector<std::string> names;
    for (const auto& comp : m.components()) {
      const auto shape = dynkin_shape(m, comp);
      if (!shape) break;
      names.push_back(std::string(1, shape->series) + std::to_string(shape->rank));
    }
    if (names.size() != m.components().size()) continue;
    std::sort(names.begin(), names.end());
    std::string joined;
    for (const auto& name : names) {
      if (!joined.empty()) joined += 'x';
      joined += name;
    }
    return joined;
  }
  throw Error(Errc::kNoTreeRepresentative, "no class member is a union of A/D/E trees");
}

std::string name_finite_mutation_type(std::span<const QuiverKey> sorted_members,
                                      const TypeRegistry& registry) {
  return registry.lookup(sorted_members).value_or(std::string(kUnnamedFiniteMutation));
}

}  // namespace atlas
