#include <doctest.h>

#include <random>

#include "atlas/error.hpp"
#include "atlas/exchange_matrix.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

ExchangeMatrix a3_path() { return ExchangeMatrix::from_matrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }

ExchangeMatrix markov() {
  return ExchangeMatrix::from_matrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an atlas::Error");
  return Errc::kParseError;
}

}  // namespace

TEST_CASE("from_matrix validates skew-symmetry") {
  const auto two = ExchangeMatrix::from_matrix({{0, 1}, {-1, 0}});
  CHECK(two.size() == 2);
  CHECK(two(0, 1) == 1);
  CHECK(two(1, 0) == -1);

  CHECK(code_of([] { ExchangeMatrix::from_matrix({{0, 1}, {0, 0}}); }) == Errc::kNotSkewSymmetric);
  CHECK(code_of([] { ExchangeMatrix::from_matrix({{1, 0}, {0, 0}}); }) == Errc::kNotSkewSymmetric);
  CHECK(code_of([] { ExchangeMatrix::from_matrix({}); }) == Errc::kEmptyMatrix);
  CHECK(code_of([] { ExchangeMatrix::from_matrix({{0, 1}, {-1}}); }) == Errc::kNotSquare);

  const auto path = a3_path();
  CHECK(path(0, 1) == 1);
  CHECK(path(1, 2) == 1);
  CHECK(path(0, 2) == 0);
}

TEST_CASE("mutate follows the matrix mutation rule") {
  const auto two = ExchangeMatrix::from_matrix({{0, 1}, {-1, 0}});
  CHECK(two.mutate(0) == ExchangeMatrix::from_matrix({{0, -1}, {1, 0}}));

  // 0 -> 1 -> 2 mutated at the middle vertex closes an oriented 3-cycle.
  CHECK(a3_path().mutate(1) ==
        ExchangeMatrix::from_matrix({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));

  // b'_12 = 2 + (-1) * max(0, (-2)(-2)) = -2
  const auto mu = markov().mutate(0);
  CHECK(mu(1, 2) == -2);
  CHECK(mu.max_weight() == 2);
  CHECK(mu == ExchangeMatrix::from_matrix({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}}));

  const auto input = a3_path();
  (void)input.mutate(1);
  CHECK(input == a3_path());

  CHECK(code_of([] { a3_path().mutate(3); }) == Errc::kVertexOutOfRange);
}

TEST_CASE("mutation overflow raises instead of wrapping") {
  const Weight big = Weight{1} << 40;
  const auto m = ExchangeMatrix::from_arrows(3, std::vector<Arrow>{{0, 1, big}, {1, 2, big}});
  CHECK(code_of([&] { m.mutate(1); }) == Errc::kOverflow);
}

TEST_CASE("max_weight") {
  CHECK(a3_path().max_weight() == 1);
  CHECK(markov().max_weight() == 2);
  CHECK(ExchangeMatrix::zero(3).max_weight() == 0);
}

TEST_CASE("replay applies mutations in order") {
  const auto m = a3_path();
  CHECK(replay(m, {}) == m);
  CHECK(replay(m, {{2, 2}}) == m);
  CHECK(replay(m, {{1, 0}}) == m.mutate(1).mutate(0));
  CHECK(code_of([&] { replay(m, {{0, 7}}); }) == Errc::kVertexOutOfRange);
}

TEST_CASE("serialization formats") {
  CHECK(serialize(a3_path()) == "[[0,1,0],[-1,0,1],[0,-1,0]]");
  CHECK(deserialize(serialize(a3_path())) == a3_path());

  const auto kronecker = deserialize("[[0, 2],\n [-2, 0]]");
  CHECK(kronecker.size() == 2);
  CHECK(kronecker(0, 1) == 2);
  CHECK(deserialize("[[0,2],[\xE2\x88\x92" "2,0]]") == kronecker);

  const std::string dot = to_dot(ExchangeMatrix::from_matrix({{0, 1}, {-1, 0}}));
  CHECK(dot.find("0 -> 1") != std::string::npos);
  CHECK(dot == "digraph quiver {\n  0;\n  1;\n  0 -> 1 [label=\"1\"];\n}\n");
  CHECK(to_dot(kronecker).find("0 -> 1 [label=\"2\"]") != std::string::npos);
  CHECK(to_dot(ExchangeMatrix::from_matrix({{0, -3}, {3, 0}})).find("1 -> 0 [label=\"3\"]") !=
        std::string::npos);
}

TEST_CASE("deserialize reports error offsets") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      deserialize(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("[[0,1],[-1,x]]") == 11);
  CHECK(offset_of("[[0,1],[-1,0]") == 13);
  CHECK(offset_of("[[0,1],[-1,0]] junk") == 15);
  CHECK(offset_of("[[0,99999999999999999999]]") == 4);
  CHECK(code_of([] { deserialize("[]"); }) == Errc::kEmptyMatrix);
  CHECK(code_of([] { deserialize("[[0,1],[1,0]]"); }) == Errc::kNotSkewSymmetric);
}

TEST_CASE("induced subquivers and components") {
  // Two components: path 0 -> 2 and the isolated vertex 1.
  const auto m = ExchangeMatrix::from_matrix({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
  const auto comps = m.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 2});
  CHECK(comps[1] == std::vector<Vertex>{1});
  CHECK_FALSE(m.is_connected());
  const std::vector<Vertex> pick{2, 0};
  CHECK(m.induced(pick) == ExchangeMatrix::from_matrix({{0, -1}, {1, 0}}));
  const std::vector<Vertex> repeated{0, 0};
  CHECK_THROWS_AS(m.induced(repeated), Error);
}

TEST_CASE("property: involution, skew-symmetry and equivariance on random quivers") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto m = oracle::random_quiver(rng, n, 3);
    const Vertex k = rng() % n;
    const auto mu = m.mutate(k);
    CAPTURE(serialize(m));
    CAPTURE(k);
    CHECK(mu.mutate(k) == m);
    CHECK_NOTHROW(ExchangeMatrix::from_matrix(mu.to_rows()));
    const auto sigma = oracle::random_permutation(rng, n);
    CHECK(m.permuted(sigma).mutate(sigma[k]) == mu.permuted(sigma));
    CHECK(deserialize(serialize(m)) == m);
  }
}
