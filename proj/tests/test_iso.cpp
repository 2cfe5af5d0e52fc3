#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mdcq/iso.hpp"
#include "oracles.hpp"

using namespace mdcq;

namespace {

ConnectionSet strict(std::vector<int> moduli, std::vector<std::vector<int>> elements) {
  std::vector<GroupElement> raw;
  for (auto& e : elements) raw.push_back({std::move(e)});
  return validate_connection_set(DimVector(std::move(moduli)), raw, NegationPolicy::strict);
}

std::vector<std::vector<int>> coords(const ConnectionSet& s) {
  std::vector<std::vector<int>> out;
  for (const auto& g : s.elements()) out.push_back(g.coords);
  return out;
}

bool preserves(const oracle::Matrix& a, const oracle::Matrix& b, const std::vector<std::uint32_t>& map) {
  if (map.size() != a.size() || b.size() != a.size()) return false;
  std::vector<bool> hit(a.size(), false);
  for (auto v : map) {
    if (v >= a.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[u][v] != b[map[u]][map[v]]) return false;
  return true;
}

oracle::Matrix circulant(int n, const std::vector<int>& s) {
  oracle::Matrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          std::count(s.begin(), s.end(), ((u - v) % n + n) % n) ? 1 : 0;
  return a;
}

// Vertex (i, j) is i*n + j; forward edges for k <= m/2, reverse edges otherwise (alpha = 1).
oracle::Matrix metacirculant(const MetacirculantSpec& spec) {
  const int m = spec.m, n = spec.n;
  oracle::Matrix a(static_cast<std::size_t>(m * n), std::vector<int>(static_cast<std::size_t>(m * n), 0));
  auto in = [&](int k, int d) {
    const auto& part = spec.parts[static_cast<std::size_t>(k)];
    return std::count(part.begin(), part.end(), ((d % n) + n) % n) > 0;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          const int k = ((i2 - i) % m + m) % m;
          const bool edge = k <= m / 2 ? in(k, j2 - j) : in(m - k, j - j2);
          a[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(i2 * n + j2)] = edge ? 1 : 0;
        }
  return a;
}

bool conditions_hold(const MetacirculantSpec& spec) {
  const int n = spec.n;
  auto negated = [&](std::vector<int> v) {
    for (auto& x : v) x = (n - x) % n;
    std::sort(v.begin(), v.end());
    return v;
  };
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto& s0 = spec.parts.front();
  if (std::count(s0.begin(), s0.end(), 0)) return false;
  if (negated(s0) != sorted(s0)) return false;
  if (spec.m % 2 == 0) {
    const auto& half = spec.parts[static_cast<std::size_t>(spec.m / 2)];
    if (negated(half) != sorted(half)) return false;
  }
  return spec.alpha == 1 && static_cast<int>(spec.parts.size()) == spec.m / 2 + 1;
}

std::vector<int> random_coprime_moduli(std::mt19937_64& rng) {
  const std::vector<std::vector<int>> by_prime = {{2, 4, 8, 16}, {3, 9}, {5}, {7}};
  for (;;) {
    std::vector<int> moduli;
    int n = 1;
    for (const auto& options : by_prime)
      if (rng() % 2) {
        const int q = options[rng() % options.size()];
        moduli.push_back(q);
        n *= q;
      }
    std::shuffle(moduli.begin(), moduli.end(), rng);
    if (moduli.size() >= 2 && n <= 64) return moduli;
  }
}

}  // namespace

TEST_CASE("coprime collapse examples") {
  const auto c1 = coprime_collapse(strict({2, 3}, {{0, 1}, {0, 2}}));
  CHECK(c1 == CirculantSpec{6, {2, 4}});
  const auto c2 = coprime_collapse(strict({2, 3}, {{1, 0}}));
  CHECK(c2 == CirculantSpec{6, {3}});
  const auto c3 = coprime_collapse(strict({7}, {{2}, {5}}));
  CHECK(c3 == CirculantSpec{7, {2, 5}});
  CHECK_THROWS_AS(coprime_collapse(strict({2, 4}, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("coprime collapse is an isomorphism on random inputs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const auto moduli = random_coprime_moduli(rng);
    const auto s = oracle::random_symmetric_set(rng, moduli);
    const auto set = oracle::to_connection_set(moduli, s);
    const auto c = coprime_collapse(set);
    REQUIRE(c.order == oracle::order(moduli));
    const auto map = coprime_vertex_map(set.dim());
    CHECK(preserves(oracle::adjacency(moduli, s), circulant(c.order, c.connection), map));
    CHECK(oracle::to_matrix(circulant_adjacency(c)) == circulant(c.order, c.connection));
  }
}

TEST_CASE("unit map examples") {
  const auto cube = strict({2, 4}, {{0, 1}, {0, 3}, {1, 0}});
  CHECK(unit_map(cube, std::vector<int>{1, 3}) == cube);
  CHECK(unit_map(cube, std::vector<int>{1, 1}) == cube);
  CHECK_THROWS_AS(unit_map(cube, std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(unit_map(cube, std::vector<int>{1}), std::invalid_argument);
  CHECK(units_mod(12) == std::vector<int>{1, 5, 7, 11});
  CHECK(units_mod(2) == std::vector<int>{1});
}

TEST_CASE("unit map is an isomorphism on random inputs") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 120; ++trial) {
    const auto moduli = oracle::random_moduli(rng, 64);
    const auto s = oracle::random_symmetric_set(rng, moduli);
    const auto set = oracle::to_connection_set(moduli, s);
    std::vector<int> alphas;
    for (int m : moduli) {
      const auto u = units_mod(m);
      alphas.push_back(u[rng() % u.size()]);
    }
    const auto image = unit_map(set, alphas);
    std::set<std::vector<int>> expected;
    for (auto g : s) {
      for (std::size_t j = 0; j < g.size(); ++j) g[j] = g[j] * alphas[j] % moduli[j];
      expected.insert(g);
    }
    CHECK(oracle::element_set(image) == expected);
    CHECK(preserves(oracle::adjacency(moduli, s), oracle::adjacency(moduli, expected),
                    unit_vertex_map(set.dim(), alphas)));
    CHECK(canonical_form(image) == canonical_form(set));
  }
}

TEST_CASE("four-to-two examples") {
  const auto image = four_to_two(strict({4, 2}, {{0, 1}, {1, 0}, {3, 0}}));
  CHECK(image.dim() == DimVector({2, 2, 2}));
  CHECK(coords(image) == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  const auto two = four_to_two(strict({4, 2}, {{2, 1}}));
  CHECK(coords(two) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(four_to_two(ConnectionSet(DimVector({4}))).empty());
  CHECK_THROWS_AS(four_to_two(strict({2, 4}, {{1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(four_to_two(strict({4, 3}, {{2, 0}})), std::invalid_argument);
}

TEST_CASE("four-to-two is an isomorphism on random inputs") {
  std::mt19937_64 rng(303);
  const int phi[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<int> moduli{4};
    const int twos = static_cast<int>(rng() % 5);
    for (int i = 0; i < twos; ++i) moduli.push_back(2);
    const auto s = oracle::random_symmetric_set(rng, moduli);
    const auto set = oracle::to_connection_set(moduli, s);
    const auto image = four_to_two(set);
    std::vector<int> target(moduli.size() + 1, 2);
    std::set<std::vector<int>> expected;
    for (const auto& g : s) {
      std::vector<int> h{phi[g[0]][0], phi[g[0]][1]};
      h.insert(h.end(), g.begin() + 1, g.end());
      expected.insert(h);
    }
    CHECK(oracle::element_set(image) == expected);
    CHECK(preserves(oracle::adjacency(moduli, s), oracle::adjacency(target, expected),
                    four_to_two_vertex_map(set.dim())));
  }
}

TEST_CASE("metacirculant view") {
  const auto meta = to_metacirculant(strict({2, 4}, {{0, 1}, {0, 3}, {1, 0}}));
  CHECK(meta == MetacirculantSpec{2, 4, 1, {{1, 3}, {0}}});
  CHECK(satisfies_metacirculant_conditions(meta));

  const auto empty = to_metacirculant(ConnectionSet(DimVector({3, 5})));
  CHECK(empty.parts == std::vector<std::vector<int>>{{}, {}});
  CHECK_THROWS_AS(to_metacirculant(ConnectionSet(DimVector({2, 2, 2}))), std::invalid_argument);

  CHECK_FALSE(satisfies_metacirculant_conditions({3, 5, 1, {{1}, {2}}}));
  CHECK_FALSE(satisfies_metacirculant_conditions({2, 5, 1, {{}, {1}}}));
  CHECK_FALSE(satisfies_metacirculant_conditions({2, 5, 1, {{0}, {}}}));
}

TEST_CASE("metacirculant view of the order-36 graphs") {
  for (const CompactConnectionSet& compact :
       {CompactConnectionSet{{{4, 5, 6, 7, 13, 14, 15, 16}, {1, 3, 7, 13, 17}}},
        CompactConnectionSet{{{3, 7, 13, 17}, {1, 5, 6, 8, 9, 11, 12, 14, 15}}}}) {
    const auto set = expand_compact(DimVector({2, 18}), compact, NegationPolicy::strict);
    const auto meta = to_metacirculant(set);
    CHECK(meta.m == 2);
    CHECK(meta.n == 18);
    CHECK(conditions_hold(meta));
    CHECK(meta.parts[0].size() + meta.parts[1].size() == 13);
    std::vector<std::uint32_t> identity(36);
    std::iota(identity.begin(), identity.end(), 0u);
    CHECK(preserves(oracle::to_matrix(build_adjacency(set).bits()), metacirculant(meta), identity));
  }
}

TEST_CASE("metacirculant view on random rank-2 inputs") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const std::vector<int> moduli{2 + static_cast<int>(rng() % 7), 2 + static_cast<int>(rng() % 7)};
    const auto s = oracle::random_symmetric_set(rng, moduli);
    const auto meta = to_metacirculant(oracle::to_connection_set(moduli, s));
    CHECK(conditions_hold(meta));
    CHECK(satisfies_metacirculant_conditions(meta));
    std::vector<std::uint32_t> identity(static_cast<std::size_t>(oracle::order(moduli)));
    std::iota(identity.begin(), identity.end(), 0u);
    CHECK(preserves(oracle::adjacency(moduli, s), metacirculant(meta), identity));
    CHECK(oracle::to_matrix(metacirculant_adjacency(meta)) == metacirculant(meta));
  }
}

TEST_CASE("is_isomorphism") {
  const auto a = build_adjacency(strict({2, 3}, {{1, 0}})).bits();
  std::vector<std::uint32_t> identity{0, 1, 2, 3, 4, 5};
  CHECK(is_isomorphism(a, a, identity));
  std::vector<std::uint32_t> swap{1, 0, 2, 3, 4, 5};
  CHECK_FALSE(is_isomorphism(a, a, swap));
  std::vector<std::uint32_t> repeated{0, 0, 2, 3, 4, 5};
  CHECK_FALSE(is_isomorphism(a, a, repeated));
  std::vector<std::uint32_t> blocks{3, 4, 5, 0, 1, 2};
  CHECK(is_isomorphism(a, a, blocks));
}

TEST_CASE("dimension vector classes") {
  const auto classes = enumerate_dimension_vectors(36);
  REQUIRE(classes.size() == 4);
  std::vector<std::vector<int>> pp;
  for (const auto& c : classes) pp.push_back(c.prime_powers);
  std::sort(pp.begin(), pp.end());
  CHECK(pp == std::vector<std::vector<int>>{{2, 2, 3, 3}, {2, 2, 9}, {3, 3, 4}, {4, 9}});
  for (const auto& c : classes) {
    CHECK(c.representatives.front() == c.prime_powers);
    if (c.prime_powers == std::vector<int>{2, 2, 3, 3}) {
      CHECK(std::count(c.representatives.begin(), c.representatives.end(), std::vector<int>{6, 6}) == 1);
      CHECK(std::count(c.representatives.begin(), c.representatives.end(), std::vector<int>{2, 3, 6}) == 1);
    }
    if (c.prime_powers == std::vector<int>{4, 9})
      CHECK(std::count(c.representatives.begin(), c.representatives.end(), std::vector<int>{36}) == 1);
    if (c.prime_powers == std::vector<int>{3, 3, 4})
      CHECK(std::count(c.representatives.begin(), c.representatives.end(), std::vector<int>{3, 12}) == 1);
    if (c.prime_powers == std::vector<int>{2, 2, 9})
      CHECK(std::count(c.representatives.begin(), c.representatives.end(), std::vector<int>{2, 18}) == 1);
  }

  const auto twelve = enumerate_dimension_vectors(12);
  REQUIRE(twelve.size() == 2);
  CHECK(enumerate_dimension_vectors(13).size() == 1);
  CHECK(enumerate_dimension_vectors(13).front().prime_powers == std::vector<int>{13});
  CHECK_THROWS_AS(enumerate_dimension_vectors(1), std::invalid_argument);

  for (int n = 2; n <= 400; ++n) {
    const auto cls = enumerate_dimension_vectors(n);
    REQUIRE(static_cast<int>(cls.size()) == oracle::prime_power_factorizations(n));
    for (const auto& c : cls)
      for (const auto& rep : c.representatives)
        CHECK(std::accumulate(rep.begin(), rep.end(), 1, std::multiplies<>()) == n);
  }
}

TEST_CASE("canonical form") {
  const auto cube = strict({2, 4}, {{0, 3}, {1, 0}, {0, 1}});
  // Units of Z_2 x Z_4 are (1,1) and (1,3); both fix this set.
  CHECK(canonical_form(cube) == cube);

  const auto a = strict({5}, {{2}, {3}});
  const auto b = strict({5}, {{1}, {4}});
  CHECK(canonical_form(a) == b);
  CHECK(canonical_form(b) == b);

  // Coordinates with equal moduli may be permuted.
  const auto p = strict({3, 3}, {{0, 1}, {0, 2}});
  const auto q = strict({3, 3}, {{1, 0}, {2, 0}});
  CHECK(canonical_form(p) == canonical_form(q));

  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const auto moduli = oracle::random_moduli(rng, 40);
    const auto set = oracle::to_connection_set(moduli, oracle::random_symmetric_set(rng, moduli));
    const auto c = canonical_form(set);
    CHECK(canonical_form(c) == c);
    CHECK(c.size() == set.size());
    CHECK(!(set.indices().size() && std::lexicographical_compare(set.indices().begin(), set.indices().end(),
                                                                 c.indices().begin(), c.indices().end())));
  }
}
