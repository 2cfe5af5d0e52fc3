#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mdcq/bits.hpp"
#include "mdcq/dim.hpp"
#include "oracles.hpp"

using namespace mdcq;

TEST_CASE("bit vector basics") {
  BitVector v(70);
  CHECK(v.popcount() == 0);
  CHECK_FALSE(v.any());
  v.set(0);
  v.set(69);
  v.flip(64);
  CHECK(v.indices() == std::vector<int>{0, 64, 69});
  CHECK(v.popcount() == 3);
  v.set(64, false);
  CHECK(v.popcount() == 2);
  CHECK((~v).popcount() == 68);
  const int idx[] = {1, 69};
  const auto w = BitVector::from_indices(70, idx);
  CHECK((v ^ w).indices() == std::vector<int>{0, 1});
  CHECK((v & w).indices() == std::vector<int>{69});
  CHECK((v | w).popcount() == 3);
  CHECK(BitVector::from_indices(4, std::vector<int>{0, 2}).to_string() == "1010");
}

TEST_CASE("gf2 rank") {
  std::vector<BitVector> rows;
  rows.push_back(BitVector::from_indices(3, std::vector<int>{0, 1}));
  rows.push_back(BitVector::from_indices(3, std::vector<int>{1, 2}));
  rows.push_back(BitVector::from_indices(3, std::vector<int>{0, 2}));
  CHECK(gf2_rank(rows) == 2);
  rows.push_back(BitVector::from_indices(3, std::vector<int>{2}));
  CHECK(gf2_rank(rows) == 3);
  CHECK(gf2_rank({}) == 0);
}

TEST_CASE("bit matrix symmetry and diagonal") {
  BitMatrix m(3);
  m.set(0, 1);
  CHECK_FALSE(m.is_symmetric());
  m.set(1, 0);
  CHECK(m.is_symmetric());
  CHECK(m.has_zero_diagonal());
  m.set(2, 2);
  CHECK_FALSE(m.has_zero_diagonal());
}

TEST_CASE("dim vector validation") {
  CHECK_THROWS_AS(DimVector(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(DimVector(std::vector<int>{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DimVector(std::vector<int>{65536, 65536}), std::invalid_argument);
  const DimVector d({3, 2, 2});
  CHECK(d.order() == 12);
  CHECK(d.rank() == 3);
  CHECK(d.stride(0) == 4);
  CHECK(d.stride(2) == 1);
  CHECK(d.to_string() == "(3,2,2)");
}

TEST_CASE("lexicographic encoding matches the reference order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto moduli = oracle::random_moduli(rng, 200);
    const DimVector d(moduli);
    for (std::uint32_t i = 0; i < d.order(); ++i) {
      const auto g = d.decode(i);
      REQUIRE(g.coords == oracle::decode(moduli, static_cast<int>(i)));
      REQUIRE(d.encode(g) == i);
      for (int j = 0; j < d.rank(); ++j) REQUIRE(d.coordinate(i, j) == g.coords[static_cast<std::size_t>(j)]);
    }
    const auto a = static_cast<std::uint32_t>(rng() % d.order());
    const auto b = static_cast<std::uint32_t>(rng() % d.order());
    CHECK(d.decode(d.subtract(a, b)).coords == oracle::difference(moduli, d.decode(a).coords, d.decode(b).coords));
    CHECK(d.add(d.subtract(a, b), b) == a);
    CHECK(d.add(a, d.negate(a)) == 0);
  }
}

TEST_CASE("reduce wraps negative coordinates") {
  const DimVector d({4, 3});
  CHECK(d.reduce({{-1, 5}}).coords == std::vector<int>{3, 2});
  CHECK_THROWS_AS(d.encode({{1}}), std::invalid_argument);
}
