#pragma once

// Test-only reference implementations. None of these share code with the
// canonical labeling or the class search they are used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "atlas/exchange_matrix.hpp"

namespace atlas::oracle {

inline std::vector<Vertex> identity(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

/// Isomorphism by trying all n! relabelings.
inline bool brute_isomorphic(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<Vertex> sigma = identity(a.size());
  do {
    bool same = true;
    for (Vertex i = 0; i < a.size() && same; ++i) {
      for (Vertex j = 0; j < a.size() && same; ++j) same = a(i, j) == b(sigma[i], sigma[j]);
    }
    if (same) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

/// Lexicographically least column-wise upper triangle over every relabeling,
/// found by branch and bound on partial columns. Exhaustive, no refinement.
class MinimalForm {
 public:
  explicit MinimalForm(const ExchangeMatrix& m) : m_(m), n_(m.size()) {}

  std::vector<Weight> run() {
    order_.clear();
    used_.assign(n_, false);
    current_.clear();
    have_best_ = false;
    place();
    best_.insert(best_.begin(), static_cast<Weight>(n_));
    return best_;
  }

 private:
  void place() {
    const std::size_t t = order_.size();
    if (t == n_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      const std::size_t mark = current_.size();
      for (std::size_t a = 0; a < t; ++a) current_.push_back(m_(order_[a], v));
      if (!have_best_ ||
          !std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<long>(current_.size()),
                                        current_.begin(), current_.end())) {
        used_[v] = true;
        order_.push_back(v);
        place();
        order_.pop_back();
        used_[v] = false;
      }
      current_.resize(mark);
    }
  }

  const ExchangeMatrix& m_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  std::vector<Weight> current_;
  std::vector<Weight> best_;
  bool have_best_ = false;
};

inline std::vector<Weight> minimal_form(const ExchangeMatrix& m) { return MinimalForm(m).run(); }

struct OracleClass {
  std::size_t size = 0;
  Weight max_weight = 0;
};

/// Plain BFS over minimal forms. Only for classes known to be finite.
inline OracleClass oracle_class(const ExchangeMatrix& start) {
  std::set<std::vector<Weight>> seen{minimal_form(start)};
  std::vector<ExchangeMatrix> frontier{start};
  OracleClass out{1, start.max_weight()};
  while (!frontier.empty()) {
    std::vector<ExchangeMatrix> next;
    for (const auto& m : frontier) {
      for (Vertex k = 0; k < m.size(); ++k) {
        ExchangeMatrix child = m.mutate(k);
        if (seen.insert(minimal_form(child)).second) {
          out.max_weight = std::max(out.max_weight, child.max_weight());
          next.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }
  out.size = seen.size();
  return out;
}

/// Random skew-symmetric matrix with off-diagonal entries in [-bound, bound].
inline ExchangeMatrix random_quiver(std::mt19937_64& rng, std::size_t n, Weight bound) {
  std::vector<Arrow> arrows;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const Weight w = static_cast<Weight>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      if (w != 0) arrows.push_back({i, j, w});
    }
  }
  return ExchangeMatrix::from_arrows(n, arrows);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> sigma = identity(n);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

}  // namespace atlas::oracle
