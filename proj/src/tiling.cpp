#include "atlas/tiling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "atlas/error.hpp"

namespace atlas {

SchlafliSymbol::SchlafliSymbol(int p, int q) : p_(p), q_(q) {
  if (p < 2 || q < 2) {
    throw Error(Errc::kInvalidSpec, "Schläfli symbol needs p >= 2 and q >= 2, got {" +
                                        std::to_string(p) + "," + std::to_string(q) + "}");
  }
}

std::string SchlafliSymbol::to_string() const {
  return "{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
}

std::string_view to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::kSpherical: return "Spherical";
    case GeometryClass::kPlanar: return "Planar";
    case GeometryClass::kHyperbolic: return "Hyperbolic";
  }
  return "Hyperbolic";
}

std::optional<GeometryClass> geometry_from_string(std::string_view text) {
  for (auto g : {GeometryClass::kSpherical, GeometryClass::kPlanar, GeometryClass::kHyperbolic}) {
    if (to_string(g) == text) return g;
  }
  return std::nullopt;
}

GeometryResult geometry_class(const SchlafliSymbol& sym) {
  const int r = (sym.p() - 2) * (sym.q() - 2);
  if (r < 4) return {GeometryClass::kSpherical, r};
  if (r == 4) return {GeometryClass::kPlanar, r};
  return {GeometryClass::kHyperbolic, r};
}

double angular_defect(const SchlafliSymbol& sym) {
  const double p = sym.p();
  const double q = sym.q();
  return 2.0 * std::numbers::pi - q * (p - 2.0) * std::numbers::pi / p;
}

int angular_defect_sign(const SchlafliSymbol& sym) {
  // p * defect / pi = 2p - q(p-2)
  const int scaled = 2 * sym.p() - sym.q() * (sym.p() - 2);
  return (scaled > 0) - (scaled < 0);
}

Eigen::Matrix3d gram_matrix(const SchlafliSymbol& sym) {
  Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
  g(0, 1) = g(1, 0) = -std::cos(std::numbers::pi / sym.p());
  g(1, 2) = g(2, 1) = -std::cos(std::numbers::pi / sym.q());
  return g;
}

GramSignature gram_signature(const SchlafliSymbol& sym) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(gram_matrix(sym),
                                                              Eigen::EigenvaluesOnly);
  const bool degenerate = geometry_class(sym).r == 4;
  GramSignature sig;
  for (double lambda : solver.eigenvalues()) {
    if (degenerate && std::abs(lambda) < kEigenvalueTolerance) {
      ++sig.zero;
    } else if (lambda > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

std::optional<GeometryClass> geometry_from_signature(const GramSignature& sig) {
  if (sig == GramSignature{3, 0, 0}) return GeometryClass::kSpherical;
  if (sig == GramSignature{2, 1, 0}) return GeometryClass::kPlanar;
  if (sig == GramSignature{2, 0, 1}) return GeometryClass::kHyperbolic;
  return std::nullopt;
}

SphericalData spherical_data(const SchlafliSymbol& sym) {
  const std::int64_t p = sym.p();
  const std::int64_t q = sym.q();
  const std::int64_t d = 2 * p + 2 * q - p * q;
  if (d <= 0) {
    throw Error(Errc::kNotSpherical, sym.to_string() + " is not a spherical tiling");
  }
  auto exact = [&](std::int64_t numerator) {
    if (numerator % d != 0) {
      throw Error(Errc::kNotSpherical,
                  "non-integral count " + std::to_string(numerator) + "/" + std::to_string(d));
    }
    return numerator / d;
  };
  return {exact(4 * p), exact(2 * p * q), exact(4 * q), exact(8 * p * q)};
}

TilingNames names(const SchlafliSymbol& sym) {
  const int p = sym.p();
  const int q = sym.q();
  if (p == 2) return {"hosohedron", "A1×I2(" + std::to_string(q) + ")"};
  if (q == 2) return {"dihedron", "A1×I2(" + std::to_string(p) + ")"};
  if (p == 3 && q == 3) return {"tetrahedron", "A3"};
  if (p == 3 && q == 4) return {"octahedron", "BC3"};
  if (p == 4 && q == 3) return {"cube", "BC3"};
  if (p == 3 && q == 5) return {"icosahedron", "H3"};
  if (p == 5 && q == 3) return {"dodecahedron", "H3"};
  if (p == 4 && q == 4) return {"square tiling", "C2(1)"};
  if (p == 3 && q == 6) return {"triangular tiling", "G2(1)"};
  if (p == 6 && q == 3) return {"hexagonal tiling", "G2(1)"};
  return {sym.to_string(), "[" + std::to_string(p) + "," + std::to_string(q) + "]"};
}

std::string table_label(const SchlafliSymbol& sym) {
  if (sym.p() == 2 || sym.q() == 2) return sym.to_string();
  return names(sym).tiling;
}

TilingReport tiling_report(const SchlafliSymbol& sym) {
  const GeometryResult geo = geometry_class(sym);
  TilingNames label = names(sym);
  std::optional<SphericalData> spherical;
  if (geo.geometry == GeometryClass::kSpherical) spherical = spherical_data(sym);
  return {sym,
          geo.geometry,
          geo.r,
          angular_defect(sym),
          gram_signature(sym),
          spherical,
          std::move(label.coxeter),
          std::move(label.tiling)};
}

}  // namespace atlas
