#pragma once

#include <optional>
#include <string>

#include "atlas/exchange_matrix.hpp"
#include "atlas/explorer.hpp"

namespace atlas {

/// Gr(p, p+q): p-planes in (p+q)-space. Derived quantities are computed on
/// demand so they can never disagree with (p, q).
class GrassmannianSpec {
 public:
  /// Throws Error{kInvalidSpec} unless p >= 2 and q >= 2.
  GrassmannianSpec(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  int r() const noexcept { return (p_ - 2) * (q_ - 2); }
  int rank() const noexcept { return (p_ - 1) * (q_ - 1); }

  GrassmannianSpec dual() const { return {q_, p_}; }
  /// "Gr(3,6)"
  std::string label() const;

  friend bool operator==(const GrassmannianSpec&, const GrassmannianSpec&) = default;

 private:
  int p_;
  int q_;
};

/// Grid seed on (p-1) x (q-1) mutable vertices v(i,j), indexed row-major
/// from 0. Arrows v(i,j)->v(i,j+1), v(i,j)->v(i+1,j) and v(i+1,j+1)->v(i,j).
ExchangeMatrix initial_quiver(const GrassmannianSpec& spec);

/// r < 4 finite type, r = 4 finite mutation type, r > 4 infinite mutation type.
Classification expected_classification(const GrassmannianSpec& spec);

/// Dynkin label from the known tables: A series on p = 2 or q = 2, D4, E6,
/// E8, E7(1,1), E8(1,1). Empty for every other cell.
std::optional<std::string> expected_type_name(const GrassmannianSpec& spec);

/// Registry naming the two finite-mutation classes by their grid seeds:
/// class(Gr(4,8)) is E7(1,1), class(Gr(3,9)) is E8(1,1).
const TypeRegistry& elliptic_registry();

}  // namespace atlas
