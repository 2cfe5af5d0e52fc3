#include "mdcq/iso.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mdcq {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

int power_mod(int base, int exp, int m) {
  long long result = 1 % m;
  long long b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

std::vector<int> scaled(const std::vector<int>& set, int factor, int m) {
  std::vector<int> out;
  for (int s : set) out.push_back(mod(static_cast<long long>(s) * factor, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

ConnectionSet image(const ConnectionSet& set, const DimVector& target, std::span<const std::uint32_t> map) {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (auto s : set.indices()) out.push_back(map[s]);
  return ConnectionSet(target, std::move(out));
}

}  // namespace

BitMatrix circulant_adjacency(const CirculantSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.order);
  BitMatrix bits(n);
  for (std::size_t u = 0; u < n; ++u)
    for (int s : spec.connection) bits.set(u, static_cast<std::size_t>(mod(static_cast<long long>(u) - s, spec.order)));
  return bits;
}

bool satisfies_metacirculant_conditions(const MetacirculantSpec& spec) {
  const int n = spec.n;
  const auto half = static_cast<std::size_t>(spec.m / 2);
  if (spec.parts.size() != half + 1) return false;
  if (std::gcd(spec.alpha, n) != 1) return false;
  const auto s0 = sorted_unique(spec.parts[0]);
  if (std::find(s0.begin(), s0.end(), 0) != s0.end()) return false;
  if (scaled(s0, -1, n) != s0) return false;
  const int alpha_m = power_mod(spec.alpha, spec.m, n);
  for (std::size_t k = 1; k <= half; ++k) {
    const auto sk = sorted_unique(spec.parts[k]);
    if (scaled(sk, alpha_m, n) != sk) return false;
  }
  if (spec.m % 2 == 0) {
    const auto last = sorted_unique(spec.parts[half]);
    const int a = power_mod(spec.alpha, spec.m / 2, n);
    if (scaled(last, a, n) != scaled(last, -1, n)) return false;
  }
  return true;
}

BitMatrix metacirculant_adjacency(const MetacirculantSpec& spec) {
  const int m = spec.m;
  const int n = spec.n;
  BitMatrix bits(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    const int a = power_mod(spec.alpha, i, n);
    for (std::size_t k = 0; k < spec.parts.size(); ++k) {
      const int target = (i + static_cast<int>(k)) % m;
      for (int j = 0; j < n; ++j) {
        for (int s : spec.parts[k]) {
          const int h = mod(j + static_cast<long long>(a) * s, n);
          const auto u = static_cast<std::size_t>(i * n + j);
          const auto v = static_cast<std::size_t>(target * n + h);
          bits.set(u, v);
          bits.set(v, u);
        }
      }
    }
  }
  return bits;
}

bool is_isomorphism(const BitMatrix& a, const BitMatrix& b, std::span<const std::uint32_t> map) {
  const auto n = a.order();
  if (b.order() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (a(u, v) != b(map[u], map[v])) return false;
  return true;
}

std::vector<std::uint32_t> coprime_vertex_map(const DimVector& dim) {
  for (int i = 0; i < dim.rank(); ++i)
    for (int j = i + 1; j < dim.rank(); ++j)
      if (std::gcd(dim.modulus(i), dim.modulus(j)) != 1)
        throw std::invalid_argument("moduli " + dim.to_string() + " are not pairwise coprime");
  std::vector<std::uint32_t> map(dim.order());
  for (std::uint32_t v = 0; v < dim.order(); ++v) {
    long long folded = dim.coordinate(v, 0);
    long long modulus = dim.modulus(0);
    for (int j = 1; j < dim.rank(); ++j) {
      const long long next = dim.modulus(j);
      folded = (next * folded + modulus * dim.coordinate(v, j)) % (modulus * next);
      modulus *= next;
    }
    map[v] = static_cast<std::uint32_t>(folded);
  }
  return map;
}

CirculantSpec coprime_collapse(const ConnectionSet& set) {
  const auto map = coprime_vertex_map(set.dim());
  CirculantSpec out;
  out.order = static_cast<int>(set.dim().order());
  for (auto s : set.indices()) out.connection.push_back(static_cast<int>(map[s]));
  std::sort(out.connection.begin(), out.connection.end());
  return out;
}

std::vector<int> units_mod(int m) {
  std::vector<int> out;
  for (int a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(a);
  if (m == 1) out.push_back(0);
  return out;
}

std::vector<std::uint32_t> unit_vertex_map(const DimVector& dim, std::span<const int> alphas) {
  if (static_cast<int>(alphas.size()) != dim.rank())
    throw std::invalid_argument("expected " + std::to_string(dim.rank()) + " multipliers");
  std::vector<int> reduced(alphas.size());
  for (int j = 0; j < dim.rank(); ++j) {
    reduced[static_cast<std::size_t>(j)] = mod(alphas[static_cast<std::size_t>(j)], dim.modulus(j));
    if (std::gcd(reduced[static_cast<std::size_t>(j)], dim.modulus(j)) != 1)
      throw std::invalid_argument(std::to_string(alphas[static_cast<std::size_t>(j)]) + " is not a unit mod " +
                                  std::to_string(dim.modulus(j)));
  }
  std::vector<std::uint32_t> map(dim.order());
  for (std::uint32_t v = 0; v < dim.order(); ++v) {
    std::uint32_t out = 0;
    for (int j = 0; j < dim.rank(); ++j)
      out = out * static_cast<std::uint32_t>(dim.modulus(j)) +
            static_cast<std::uint32_t>(mod(static_cast<long long>(reduced[static_cast<std::size_t>(j)]) * dim.coordinate(v, j),
                                           dim.modulus(j)));
    map[v] = out;
  }
  return map;
}

ConnectionSet unit_map(const ConnectionSet& set, std::span<const int> alphas) {
  return image(set, set.dim(), unit_vertex_map(set.dim(), alphas));
}

namespace {

DimVector two_power_dim(const DimVector& dim) {
  if (dim.modulus(0) != 4) throw std::invalid_argument("four_to_two needs first modulus 4, got " + dim.to_string());
  for (int j = 1; j < dim.rank(); ++j)
    if (dim.modulus(j) != 2) throw std::invalid_argument("four_to_two needs trailing moduli 2, got " + dim.to_string());
  return DimVector(std::vector<int>(static_cast<std::size_t>(dim.rank()) + 1, 2));
}

}  // namespace

std::vector<std::uint32_t> four_to_two_vertex_map(const DimVector& dim) {
  const auto target = two_power_dim(dim);
  static constexpr int kHead[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<std::uint32_t> map(dim.order());
  for (std::uint32_t v = 0; v < dim.order(); ++v) {
    const auto g = dim.decode(v);
    GroupElement out;
    out.coords = {kHead[g.coords[0]][0], kHead[g.coords[0]][1]};
    out.coords.insert(out.coords.end(), g.coords.begin() + 1, g.coords.end());
    map[v] = target.encode(out);
  }
  return map;
}

ConnectionSet four_to_two(const ConnectionSet& set) {
  return image(set, two_power_dim(set.dim()), four_to_two_vertex_map(set.dim()));
}

MetacirculantSpec to_metacirculant(const ConnectionSet& set) {
  const auto& dim = set.dim();
  if (dim.rank() != 2) throw std::invalid_argument("to_metacirculant needs a two-dimensional graph, got " + dim.to_string());
  MetacirculantSpec out;
  out.m = dim.modulus(0);
  out.n = dim.modulus(1);
  out.alpha = 1;
  out.parts.resize(static_cast<std::size_t>(out.m / 2) + 1);
  for (auto s : set.indices()) {
    const int i = dim.coordinate(s, 0);
    if (i <= out.m / 2) out.parts[static_cast<std::size_t>(i)].push_back(dim.coordinate(s, 1));
  }
  return out;
}

namespace {

void integer_partitions(int e, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    current.push_back(part);
    integer_partitions(e - part, part, current, out);
    current.pop_back();
  }
}

struct PrimePower {
  int prime;
  int value;
};

// Groups items so no group repeats a prime; records each grouping's moduli.
void merge_coprime(const std::vector<PrimePower>& items, std::size_t next, std::vector<std::vector<PrimePower>>& groups,
                   std::set<std::vector<int>>& out) {
  if (next == items.size()) {
    std::vector<int> moduli;
    for (const auto& g : groups) {
      int product = 1;
      for (const auto& p : g) product *= p.value;
      moduli.push_back(product);
    }
    std::sort(moduli.begin(), moduli.end());
    out.insert(moduli);
    return;
  }
  const auto& item = items[next];
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (std::any_of(groups[i].begin(), groups[i].end(), [&](const PrimePower& p) { return p.prime == item.prime; }))
      continue;
    groups[i].push_back(item);
    merge_coprime(items, next + 1, groups, out);
    groups[i].pop_back();
  }
  groups.push_back({item});
  merge_coprime(items, next + 1, groups, out);
  groups.pop_back();
}

}  // namespace

std::vector<DimClass> enumerate_dimension_vectors(int n) {
  if (n < 2) throw std::invalid_argument("order must be >= 2");
  std::vector<std::pair<int, int>> factors;
  int rest = n;
  for (int p = 2; static_cast<long long>(p) * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);

  std::vector<std::vector<PrimePower>> combos{{}};
  for (auto [p, e] : factors) {
    std::vector<std::vector<int>> parts;
    std::vector<int> scratch;
    integer_partitions(e, e, scratch, parts);
    std::vector<std::vector<PrimePower>> next;
    for (const auto& base : combos) {
      for (const auto& partition : parts) {
        auto extended = base;
        for (int k : partition) {
          int value = 1;
          for (int t = 0; t < k; ++t) value *= p;
          extended.push_back({p, value});
        }
        next.push_back(std::move(extended));
      }
    }
    combos = std::move(next);
  }

  std::vector<DimClass> out;
  for (const auto& items : combos) {
    DimClass cls;
    for (const auto& pp : items) cls.prime_powers.push_back(pp.value);
    std::sort(cls.prime_powers.begin(), cls.prime_powers.end());
    std::set<std::vector<int>> reps;
    std::vector<std::vector<PrimePower>> groups;
    merge_coprime(items, 0, groups, reps);
    cls.representatives.assign(reps.begin(), reps.end());
    std::stable_sort(cls.representatives.begin(), cls.representatives.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const DimClass& a, const DimClass& b) { return a.prime_powers < b.prime_powers; });
  return out;
}

ConnectionSet canonical_form(const ConnectionSet& set) {
  const auto& dim = set.dim();
  const int k = dim.rank();
  std::vector<std::vector<int>> unit_lists;
  for (int j = 0; j < k; ++j) unit_lists.push_back(units_mod(dim.modulus(j)));

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) ok = dim.modulus(perm[static_cast<std::size_t>(j)]) == dim.modulus(j);
    if (ok) perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::uint32_t> best(set.indices().begin(), set.indices().end());
  std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
  std::vector<std::uint32_t> candidate(set.size());
  std::vector<int> coords(static_cast<std::size_t>(k));
  while (true) {
    for (const auto& p : perms) {
      for (std::size_t t = 0; t < set.size(); ++t) {
        const auto s = set.indices()[t];
        std::uint32_t out = 0;
        for (int j = 0; j < k; ++j) {
          const int alpha = unit_lists[static_cast<std::size_t>(j)][choice[static_cast<std::size_t>(j)]];
          const int c = dim.coordinate(s, p[static_cast<std::size_t>(j)]);
          out = out * static_cast<std::uint32_t>(dim.modulus(j)) +
                static_cast<std::uint32_t>(mod(static_cast<long long>(alpha) * c, dim.modulus(j)));
        }
        candidate[t] = out;
      }
      std::sort(candidate.begin(), candidate.end());
      if (candidate < best) best = candidate;
    }
    int j = 0;
    for (; j < k; ++j) {
      auto& c = choice[static_cast<std::size_t>(j)];
      if (++c < unit_lists[static_cast<std::size_t>(j)].size()) break;
      c = 0;
    }
    if (j == k) break;
  }
  return ConnectionSet(dim, std::move(best));
}

}  // namespace mdcq
