#include "atlas/grassmannian.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "atlas/error.hpp"

namespace atlas {

GrassmannianSpec::GrassmannianSpec(int p, int q) : p_(p), q_(q) {
  if (p < 2 || q < 2) {
    throw Error(Errc::kInvalidSpec, "Gr(p,p+q) needs p >= 2 and q >= 2, got p=" +
                                        std::to_string(p) + " q=" + std::to_string(q));
  }
}

std::string GrassmannianSpec::label() const {
  return "Gr(" + std::to_string(p_) + "," + std::to_string(n()) + ")";
}

ExchangeMatrix initial_quiver(const GrassmannianSpec& spec) {
  const auto rows = static_cast<std::size_t>(spec.p() - 1);
  const auto cols = static_cast<std::size_t>(spec.q() - 1);
  auto v = [cols](std::size_t i, std::size_t j) -> Vertex { return i * cols + j; };
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols) arrows.push_back({v(i, j), v(i, j + 1)});
      if (i + 1 < rows) arrows.push_back({v(i, j), v(i + 1, j)});
      if (i + 1 < rows && j + 1 < cols) arrows.push_back({v(i + 1, j + 1), v(i, j)});
    }
  }
  return ExchangeMatrix::from_arrows(rows * cols, arrows);
}

Classification expected_classification(const GrassmannianSpec& spec) {
  if (spec.r() < 4) return Classification::kFiniteType;
  if (spec.r() == 4) return Classification::kFiniteMutationType;
  return Classification::kInfiniteMutationType;
}

std::optional<std::string> expected_type_name(const GrassmannianSpec& spec) {
  const int lo = std::min(spec.p(), spec.q());
  const int hi = std::max(spec.p(), spec.q());
  if (lo == 2) return "A" + std::to_string(hi - 1);
  if (lo == 3 && hi == 3) return "D4";
  if (lo == 3 && hi == 4) return "E6";
  if (lo == 3 && hi == 5) return "E8";
  if (lo == 4 && hi == 4) return "E7(1,1)";
  if (lo == 3 && hi == 6) return "E8(1,1)";
  return std::nullopt;
}

const TypeRegistry& elliptic_registry() {
  static const TypeRegistry registry = [] {
    TypeRegistry r;
    r.add(initial_quiver({4, 4}), "E7(1,1)");
    r.add(initial_quiver({3, 6}), "E8(1,1)");
    return r;
  }();
  return registry;
}

}  // namespace atlas
