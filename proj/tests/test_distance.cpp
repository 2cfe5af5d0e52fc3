#include <random>

#include "doctest.h"
#include "mdcq/distance.hpp"
#include "oracles.hpp"

using namespace mdcq;

namespace {

GraphCode single_edge() {
  BitMatrix m(2);
  m.set(0, 1);
  m.set(1, 0);
  return GraphCode(m);
}

GraphCode random_code(std::mt19937_64& rng, int max_order, oracle::Matrix* adjacency = nullptr) {
  const auto moduli = oracle::random_moduli(rng, max_order);
  const auto s = oracle::random_symmetric_set(rng, moduli);
  if (adjacency) *adjacency = oracle::adjacency(moduli, s);
  return code_from_graph(build_adjacency(oracle::to_connection_set(moduli, s)));
}

GraphCode from_compact(std::vector<int> moduli, CompactConnectionSet compact) {
  return code_from_graph(build_adjacency(expand_compact(DimVector(std::move(moduli)), compact, NegationPolicy::strict)));
}

}  // namespace

TEST_CASE("symplectic weight") {
  SymplecticVector v{BitVector::from_indices(4, std::vector<int>{0, 1}), BitVector::from_indices(4, std::vector<int>{1, 2})};
  CHECK(symplectic_weight(v) == 3);
  CHECK(symplectic_weight({BitVector(5), BitVector(5)}) == 0);
  const auto code = from_compact({2, 18}, {{{4, 5, 6, 7, 13, 14, 15, 16}, {1, 3, 7, 13, 17}}});
  for (int i = 0; i < code.length(); ++i) CHECK(symplectic_weight(code.generator(i)) == 14);
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(77, 7) == 2404808340ull);
  CHECK(combinations_up_to(4, 2) == 4 + 6);
  CHECK(binomial(200, 100) == ~std::uint64_t{0});
}

TEST_CASE("single edge code") {
  const auto code = single_edge();
  const auto wd = weight_distribution_full(code);
  CHECK(wd.counts == std::vector<std::uint64_t>{1, 0, 3});
  CHECK(min_distance_exact(code).lower == 2);
  CHECK(min_distance_at_least(code, 2));
  CHECK_FALSE(min_distance_at_least(code, 3));
  CHECK(min_distance_at_least(code, 1));
}

TEST_CASE("best (2,2) code has distance 2") {
  int best = 0;
  for (const CompactConnectionSet& c :
       {CompactConnectionSet{{{2}, {}}}, CompactConnectionSet{{{}, {1}}}, CompactConnectionSet{{{}, {2}}},
        CompactConnectionSet{{{2}, {1}}}, CompactConnectionSet{{{2}, {2}}}, CompactConnectionSet{{{}, {1, 2}}},
        CompactConnectionSet{{{2}, {1, 2}}}})
    best = std::max(best, min_distance_exact(from_compact({2, 2}, c)).lower);
  CHECK(best == 2);
}

TEST_CASE("exact distance and weight distribution against brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    oracle::Matrix a;
    const auto code = random_code(rng, 16, &a);
    const auto wd = oracle::weight_distribution(a);
    const auto full = weight_distribution_full(code);
    REQUIRE(full.counts == wd);
    CHECK(full.total() == (std::uint64_t{1} << code.length()));
    const auto report = min_distance_exact(code, {.witness = true});
    CHECK(report.lower == oracle::min_distance(a));
    CHECK(report.exact);
    CHECK(report.upper == report.lower);
    REQUIRE(report.witness);
    BitVector c(static_cast<std::size_t>(code.length()));
    for (int i : *report.witness) c.set(static_cast<std::size_t>(i));
    CHECK(symplectic_weight(code.codeword(c)) == report.lower);
    const int wmax = static_cast<int>(rng() % static_cast<std::uint64_t>(code.length() + 1));
    const auto census = low_weight_census(code, wmax);
    REQUIRE(census.counts.size() == static_cast<std::size_t>(wmax) + 1);
    for (int w = 0; w <= wmax; ++w) CHECK(census[static_cast<std::size_t>(w)] == wd[static_cast<std::size_t>(w)]);
  }
}

TEST_CASE("thread count does not change results") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto code = random_code(rng, 24);
    const auto one = min_distance_exact(code, {.threads = 1, .witness = true});
    const auto four = min_distance_exact(code, {.threads = 4, .witness = true});
    CHECK(one.lower == four.lower);
    CHECK(one.work == four.work);
    CHECK(one.witness == four.witness);
    CHECK(low_weight_census(code, 5, {.threads = 1}) == low_weight_census(code, 5, {.threads = 3}));
    CHECK(weight_distribution_full(code, 36, 1) == weight_distribution_full(code, 36, 4));
  }
}

TEST_CASE("distance bounds") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    oracle::Matrix a;
    const auto code = random_code(rng, 20, &a);
    const int d = min_distance_exact(code).lower;
    int max_degree = 0;
    for (const auto& row : a) max_degree = std::max(max_degree, static_cast<int>(std::count(row.begin(), row.end(), 1)));
    const int radius = static_cast<int>(rng() % 6);
    const auto r = distance_bounds(code, radius, {.restarts = 8, .seed = 5});
    CHECK(r.lower <= d);
    CHECK(r.upper >= d);
    CHECK(r.upper <= 1 + max_degree);
    CHECK(r.lower >= std::min(d, radius + 1));
    CHECK(r.exact == (r.lower == r.upper));
    const auto full = distance_bounds(code, code.length(), {.restarts = 0});
    CHECK(full.exact);
    CHECK(full.lower == d);
  }
}

TEST_CASE("bounds are reproducible from the seed") {
  std::mt19937_64 rng(53);
  const auto code = random_code(rng, 40);
  const auto a = distance_bounds(code, 2, {.restarts = 20, .seed = 9});
  const auto b = distance_bounds(code, 2, {.restarts = 20, .seed = 9});
  CHECK(a.upper == b.upper);
  CHECK(a.sampled == b.sampled);
  CHECK(a.work == b.work);
}

TEST_CASE("budgets") {
  const auto code = from_compact({2, 18}, {{{4, 5, 6, 7, 13, 14, 15, 16}, {1, 3, 7, 13, 17}}});
  CHECK_THROWS_AS(min_distance_exact(code, {.budget = 1000}), BudgetExceeded);
  try {
    min_distance_exact(code, {.budget = 100000});
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial().budget_exhausted);
    CHECK(e.partial().work <= 100000);
    CHECK(e.partial().lower >= 1);
  }
  const auto partial = low_weight_census_partial(code, 12, {.budget = 100000});
  CHECK_FALSE(partial.complete);
  CHECK(partial.counts.counts.size() == static_cast<std::size_t>(partial.radius) + 1);
  CHECK(partial.counts[0] == 1);
  CHECK_THROWS_AS(low_weight_census(code, 12, {.budget = 100000}), BudgetExceeded);
  const auto b = distance_bounds(code, 12, {.budget = 100000, .restarts = 0});
  CHECK(b.budget_exhausted);
  CHECK(b.radius < 12);
  CHECK_THROWS_AS(weight_distribution_full(code, 20), std::invalid_argument);
}

TEST_CASE("gray walk covers every codeword once") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const auto code = random_code(rng, 18);
    const auto stats = gray_walk_stats(code);
    CHECK(stats.visits == (std::uint64_t{1} << code.length()));
    CHECK(stats.returned_to_zero);
  }
}

TEST_CASE("edgeless code has distance 1") {
  const auto code = code_from_graph(build_adjacency(ConnectionSet(DimVector({3, 3}))));
  CHECK(min_distance_exact(code).lower == 1);
  CHECK(low_weight_census(code, 2).counts == std::vector<std::uint64_t>{1, 9, 36});
}
