#include <doctest.h>

#include "atlas/canonical.hpp"
#include "atlas/error.hpp"
#include "atlas/grassmannian.hpp"

using namespace atlas;

TEST_CASE("spec validation and derived quantities") {
  CHECK_THROWS_AS(GrassmannianSpec(1, 4), Error);
  CHECK_THROWS_AS(GrassmannianSpec(3, 0), Error);
  const GrassmannianSpec spec(3, 4);
  CHECK(spec.n() == 7);
  CHECK(spec.r() == 2);
  CHECK(spec.rank() == 6);
  CHECK(spec.dual() == GrassmannianSpec(4, 3));
  CHECK(spec.label() == "Gr(3,7)");
}

TEST_CASE("initial quiver examples") {
  CHECK(initial_quiver({2, 4}) == ExchangeMatrix::from_arrows(3, std::vector<Arrow>{{0, 1}, {1, 2}}));

  const auto d4 = initial_quiver({3, 3});
  CHECK(d4.size() == 4);
  CHECK(d4.arrow_pair_count() == 5);
  CHECK(d4.max_weight() == 1);
  CHECK(d4(3, 0) == 1);  // back diagonal v(1,1) -> v(0,0)
}

TEST_CASE("grid shape for every small cell") {
  for (int p = 2; p <= 9; ++p) {
    for (int q = 2; q <= 9; ++q) {
      const auto m = initial_quiver({p, q});
      const std::size_t a = static_cast<std::size_t>(p - 1);
      const std::size_t b = static_cast<std::size_t>(q - 1);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(m.size() == a * b);
      CHECK(m.arrow_pair_count() == a * (b - 1) + (a - 1) * b + (a - 1) * (b - 1));
      CHECK(m.max_weight() <= 1);
      CHECK(m.is_connected());
      CHECK(is_isomorphic(m, initial_quiver({q, p})));
    }
  }
}

TEST_CASE("expected classification and names") {
  CHECK(expected_classification({3, 3}) == Classification::kFiniteType);
  CHECK(expected_classification({4, 4}) == Classification::kFiniteMutationType);
  CHECK(expected_classification({3, 6}) == Classification::kFiniteMutationType);
  CHECK(expected_classification({4, 5}) == Classification::kInfiniteMutationType);
  CHECK(expected_classification({2, 40}) == Classification::kFiniteType);

  CHECK(expected_type_name({2, 6}) == "A5");
  CHECK(expected_type_name({6, 2}) == "A5");
  CHECK(expected_type_name({3, 3}) == "D4");
  CHECK(expected_type_name({4, 3}) == "E6");
  CHECK(expected_type_name({5, 3}) == "E8");
  CHECK(expected_type_name({4, 4}) == "E7(1,1)");
  CHECK(expected_type_name({6, 3}) == "E8(1,1)");
  CHECK_FALSE(expected_type_name({4, 5}).has_value());

  for (int p = 2; p <= 20; ++p) {
    for (int q = 2; q <= 20; ++q) {
      CHECK(expected_classification({p, q}) == expected_classification({q, p}));
      CHECK(expected_type_name({p, q}) == expected_type_name({q, p}));
    }
  }
}
