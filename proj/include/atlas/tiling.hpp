#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace atlas {

/// Regular tiling {p,q}: regular p-gons, q around each vertex.
class SchlafliSymbol {
 public:
  /// Throws Error{kInvalidSpec} unless p >= 2 and q >= 2.
  SchlafliSymbol(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  SchlafliSymbol dual() const { return {q_, p_}; }
  /// "{p,q}"
  std::string to_string() const;

  friend bool operator==(const SchlafliSymbol&, const SchlafliSymbol&) = default;

 private:
  int p_;
  int q_;
};

enum class GeometryClass { kSpherical, kPlanar, kHyperbolic };

std::string_view to_string(GeometryClass g);
std::optional<GeometryClass> geometry_from_string(std::string_view text);

struct GeometryResult {
  GeometryClass geometry;
  int r;  // (p-2)(q-2)
};

/// Exact integer decision: r < 4 spherical, r = 4 planar, r > 4 hyperbolic.
GeometryResult geometry_class(const SchlafliSymbol& sym);

/// 2*pi - q*(p-2)*pi/p, in radians.
double angular_defect(const SchlafliSymbol& sym);

/// Sign of the angular defect from integers: sign(2p + 2q - pq).
int angular_defect_sign(const SchlafliSymbol& sym);

/// Cosine Gram matrix of the rank-3 Coxeter group [p,q].
Eigen::Matrix3d gram_matrix(const SchlafliSymbol& sym);

struct GramSignature {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  friend bool operator==(const GramSignature&, const GramSignature&) = default;
};

inline constexpr double kEigenvalueTolerance = 1e-9;

/// Inertia of the Gram matrix. An eigenvalue within kEigenvalueTolerance of
/// zero counts as zero only when r = 4, where the form is exactly degenerate.
GramSignature gram_signature(const SchlafliSymbol& sym);

/// (3,0,0) spherical, (2,1,0) planar, (2,0,1) hyperbolic; nullopt otherwise.
std::optional<GeometryClass> geometry_from_signature(const GramSignature& sig);

struct SphericalData {
  std::int64_t vertices;
  std::int64_t edges;
  std::int64_t faces;
  std::int64_t group_order;
  friend bool operator==(const SphericalData&, const SphericalData&) = default;
};

/// Euler counts and symmetry group order of a spherical tiling, with
/// d = 4 - r: V = 4p/d, E = 2pq/d, F = 4q/d, |[p,q]| = 8pq/d.
/// Throws Error{kNotSpherical}.
SphericalData spherical_data(const SchlafliSymbol& sym);

struct TilingNames {
  std::string tiling;
  std::string coxeter;
  friend bool operator==(const TilingNames&, const TilingNames&) = default;
};

/// Tiling and Coxeter-group names: hosohedron/dihedron with A1×I2(n), the
/// Platonic solids with A3/BC3/H3, the planar tilings with C2(1)/G2(1), and
/// "{p,q}"/"[p,q]" for hyperbolic symbols.
TilingNames names(const SchlafliSymbol& sym);

/// Cell text of the regular tiling table: the solid or planar tiling name
/// where one is printed there, "{p,q}" otherwise (including the degenerate
/// p = 2 and q = 2 rows).
std::string table_label(const SchlafliSymbol& sym);

struct TilingReport {
  SchlafliSymbol symbol;
  GeometryClass geometry;
  int r;
  double defect;
  GramSignature gram_signature;
  std::optional<SphericalData> spherical;
  std::string coxeter_name;
  std::string tiling_name;
};

TilingReport tiling_report(const SchlafliSymbol& sym);

}  // namespace atlas
