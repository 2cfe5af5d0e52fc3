#include "mdcq/distance.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <random>
#include <string>

#include "kernel.hpp"

namespace mdcq {

using detail::LevelWalker;
using detail::PackedCode;
using detail::Word;

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

int symplectic_weight(const SymplecticVector& v) { return (v.x | v.z).popcount(); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t combinations_up_to(int n, int radius) {
  std::uint64_t sum = 0;
  for (int w = 1; w <= std::min(radius, n); ++w) {
    const auto c = binomial(n, w);
    if (UINT64_MAX - sum < c) return UINT64_MAX;
    sum += c;
  }
  return sum;
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return UINT64_MAX - a < b ? UINT64_MAX : a + b; }

struct LevelMin {
  int best = INT_MAX;
  std::vector<int> witness;
  std::uint64_t leaves = 0;
};

// Minimum weight over one popcount level. Tasks are indexed by the smallest
// element; merging in task order keeps the witness the lexicographically
// first minimizer regardless of thread count.
template <int W>
LevelMin scan_min_level(const PackedCode<W>& code, int level, int threads, bool want_witness) {
  const int tasks = code.n - level + 1;
  std::vector<LevelMin> parts(static_cast<std::size_t>(tasks));
  detail::parallel_tasks(tasks, threads, [&](int first) {
    LevelMin& part = parts[static_cast<std::size_t>(first)];
    auto leaf = [&](int weight, std::span<const int> prefix, int last) {
      ++part.leaves;
      if (weight < part.best) {
        part.best = weight;
        if (want_witness) {
          part.witness.assign(prefix.begin(), prefix.end());
          part.witness.push_back(last);
        }
      }
      return true;
    };
    LevelWalker<W, decltype(leaf)> walker(code, level, leaf);
    walker.run(first);
  });
  LevelMin out;
  for (auto& part : parts) {
    out.leaves += part.leaves;
    if (part.best < out.best) {
      out.best = part.best;
      out.witness = std::move(part.witness);
    }
  }
  return out;
}

struct LevelCensus {
  std::vector<std::uint64_t> counts;
  std::uint64_t leaves = 0;
};

template <int W>
LevelCensus scan_census_level(const PackedCode<W>& code, int level, int wmax, int threads) {
  const int tasks = code.n - level + 1;
  std::vector<LevelCensus> parts(static_cast<std::size_t>(tasks));
  detail::parallel_tasks(tasks, threads, [&](int first) {
    auto& part = parts[static_cast<std::size_t>(first)];
    part.counts.assign(static_cast<std::size_t>(wmax) + 1, 0);
    auto leaf = [&](int weight, std::span<const int>, int) {
      ++part.leaves;
      if (weight <= wmax) ++part.counts[static_cast<std::size_t>(weight)];
      return true;
    };
    LevelWalker<W, decltype(leaf)> walker(code, level, leaf);
    walker.run(first);
  });
  LevelCensus out;
  out.counts.assign(static_cast<std::size_t>(wmax) + 1, 0);
  for (const auto& part : parts) {
    out.leaves += part.leaves;
    for (std::size_t w = 0; w < part.counts.size(); ++w) out.counts[w] += part.counts[w];
  }
  return out;
}

// True if some combination at this level has weight < target.
template <int W>
bool scan_level_below(const PackedCode<W>& code, int level, int target, int threads) {
  const int tasks = code.n - level + 1;
  std::atomic<bool> found{false};
  detail::parallel_tasks(tasks, threads, [&](int first) {
    if (found.load(std::memory_order_relaxed)) return;
    std::uint32_t tick = 0;
    auto leaf = [&](int weight, std::span<const int>, int) {
      if (weight < target) {
        found.store(true, std::memory_order_relaxed);
        return false;
      }
      return (++tick & 0xffff) != 0 || !found.load(std::memory_order_relaxed);
    };
    LevelWalker<W, decltype(leaf)> walker(code, level, leaf);
    walker.run(first);
  });
  return found.load();
}

// Gray walk over the low `low_bits` combination bits with the high bits fixed
// to `high`. Returns true if the final step lands back on the start state.
template <int W>
bool gray_block(const PackedCode<W>& code, int low_bits, std::uint64_t high, std::vector<std::uint64_t>& counts,
                std::uint64_t& visits) {
  Word<W> x, z;
  for (int b = low_bits; b < code.n; ++b) {
    if ((high >> (b - low_bits)) & 1u) {
      z = z ^ code.rows[static_cast<std::size_t>(b)];
      x = x ^ code.units[static_cast<std::size_t>(b)];
    }
  }
  const Word<W> start_x = x, start_z = z;
  ++counts[static_cast<std::size_t>((x | z).popcount())];
  ++visits;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    z = z ^ code.rows[bit];
    x = x ^ code.units[bit];
    ++counts[static_cast<std::size_t>((x | z).popcount())];
    ++visits;
  }
  if (low_bits > 0) {
    const auto bit = static_cast<std::size_t>(low_bits - 1);
    z = z ^ code.rows[bit];
    x = x ^ code.units[bit];
  }
  return x.w == start_x.w && z.w == start_z.w;
}

DistanceReport finish(DistanceReport r) {
  r.exact = r.lower == r.upper;
  return r;
}

}  // namespace

WeightDistribution weight_distribution_full(const GraphCode& code, int cap, int threads) {
  const int n = code.length();
  if (n > cap)
    throw std::invalid_argument("full weight distribution needs 2^" + std::to_string(n) +
                                " codewords; length exceeds cap " + std::to_string(cap));
  if (n > 62) throw std::invalid_argument("full enumeration limited to n <= 62");
  return detail::with_words(n, [&](auto wc) {
    constexpr int W = decltype(wc)::value;
    const PackedCode<W> packed(code);
    const int high_bits = std::max(0, n - 24);
    const int low_bits = n - high_bits;
    const int tasks = 1 << high_bits;
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(tasks));
    detail::parallel_tasks(tasks, threads, [&](int t) {
      auto& counts = parts[static_cast<std::size_t>(t)];
      counts.assign(static_cast<std::size_t>(n) + 1, 0);
      std::uint64_t visits = 0;
      gray_block(packed, low_bits, static_cast<std::uint64_t>(t), counts, visits);
    });
    WeightDistribution wd;
    wd.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : parts)
      for (std::size_t w = 0; w < p.size(); ++w) wd.counts[w] += p[w];
    return wd;
  });
}

GrayWalkStats gray_walk_stats(const GraphCode& code) {
  const int n = code.length();
  if (n > 24) throw std::invalid_argument("gray_walk_stats limited to n <= 24");
  return detail::with_words(n, [&](auto wc) {
    constexpr int W = decltype(wc)::value;
    const PackedCode<W> packed(code);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    GrayWalkStats stats;
    stats.returned_to_zero = gray_block(packed, n, 0, counts, stats.visits);
    return stats;
  });
}

DistanceReport min_distance_exact(const GraphCode& code, const EnumerationOptions& options) {
  const int n = code.length();
  return detail::with_words(n, [&](auto wc) {
    constexpr int W = decltype(wc)::value;
    const PackedCode<W> packed(code);
    DistanceReport report;
    int best = INT_MAX;
    for (int level = 1; level <= n && level < best; ++level) {
      const auto cost = binomial(n, level);
      if (saturating_add(report.work, cost) > options.budget) {
        report.lower = std::min(best, level);
        report.upper = best == INT_MAX ? n : best;
        report.budget_exhausted = true;
        throw BudgetExceeded("exact distance needs popcount level " + std::to_string(level) + " (" +
                                 std::to_string(cost) + " combinations) beyond budget " +
                                 std::to_string(options.budget),
                             finish(report));
      }
      auto scan = scan_min_level(packed, level, options.threads, options.witness);
      report.work += scan.leaves;
      report.radius = level;
      if (scan.best < best) {
        best = scan.best;
        if (options.witness) report.witness = std::move(scan.witness);
      }
    }
    report.lower = report.upper = best;
    return finish(report);
  });
}

bool min_distance_at_least(const GraphCode& code, int target, int threads) {
  const int n = code.length();
  return detail::with_words(n, [&](auto wc) {
    constexpr int W = decltype(wc)::value;
    const PackedCode<W> packed(code);
    for (int level = 1; level < target && level <= n; ++level)
      if (scan_level_below(packed, level, target, threads)) return false;
    return true;
  });
}

namespace {

struct SearchHit {
  int weight = INT_MAX;
  std::vector<int> combination;
  std::uint64_t evaluations = 0;
};

// Seeded greedy descent from random combinations above the enumerated radius.
template <int W>
SearchHit local_search(const PackedCode<W>& code, int min_popcount, int restarts, std::uint64_t seed) {
  SearchHit hit;
  const int n = code.n;
  if (restarts <= 0 || min_popcount > n) return hit;
  std::mt19937_64 rng(seed);
  const int hi = std::max(min_popcount, n / 2);
  std::uniform_int_distribution<int> size_dist(min_popcount, hi);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<bool> chosen(static_cast<std::size_t>(n));

  auto record = [&](const Word<W>& x, const Word<W>& z) {
    ++hit.evaluations;
    const int weight = (x | z).popcount();
    if (weight < x.popcount()) throw std::logic_error("codeword lighter than its combination popcount");
    if (weight < hit.weight) {
      hit.weight = weight;
      hit.combination.clear();
      for (int i = 0; i < n; ++i)
        if ((x.w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u) hit.combination.push_back(i);
    }
    return weight;
  };

  for (int r = 0; r < restarts; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    const int size = size_dist(rng);
    Word<W> x, z;
    for (int k = 0; k < size; ++k) {
      const auto i = static_cast<std::size_t>(order[static_cast<std::size_t>(k)]);
      x = x ^ code.units[i];
      z = z ^ code.rows[i];
    }
    int current = record(x, z);
    for (int step = 0; step < 2 * n; ++step) {
      int best_flip = -1;
      int best_weight = current;
      for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const Word<W> nx = x ^ code.units[ui];
        if (!nx.any()) continue;
        const int weight = record(nx, z ^ code.rows[ui]);
        if (weight < best_weight) {
          best_weight = weight;
          best_flip = i;
        }
      }
      if (best_flip < 0) break;
      x = x ^ code.units[static_cast<std::size_t>(best_flip)];
      z = z ^ code.rows[static_cast<std::size_t>(best_flip)];
      current = best_weight;
    }
  }
  return hit;
}

}  // namespace

DistanceReport distance_bounds(const GraphCode& code, int radius, const BoundsOptions& options) {
  const int n = code.length();
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  radius = std::min(radius, n);
  return detail::with_words(n, [&](auto wc) {
    constexpr int W = decltype(wc)::value;
    const PackedCode<W> packed(code);
    DistanceReport report;
    int best = INT_MAX;
    std::vector<int> witness;
    int completed = 0;
    for (int level = 1; level <= radius; ++level) {
      if (best <= level) {
        // Higher levels cannot go below best; treat them as covered.
        completed = radius;
        break;
      }
      const auto cost = binomial(n, level);
      if (saturating_add(report.work, cost) > options.budget) {
        report.budget_exhausted = true;
        break;
      }
      auto scan = scan_min_level(packed, level, options.threads, options.witness);
      report.work += scan.leaves;
      completed = level;
      if (scan.best < best) {
        best = scan.best;
        witness = std::move(scan.witness);
      }
    }
    report.radius = completed;
    report.lower = std::min(best, completed + 1);

    // A generator is always a codeword.
    int upper = best;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const int weight = (packed.rows[ui] | packed.units[ui]).popcount();
      if (weight < upper) {
        upper = weight;
        if (options.witness) witness = {i};
      }
    }
    if (report.lower < upper) {
      auto hit = local_search(packed, completed + 1, options.restarts, options.seed);
      report.sampled = hit.evaluations;
      if (hit.weight < upper) {
        upper = hit.weight;
        witness = std::move(hit.combination);
      }
    }
    report.upper = upper;
    if (options.witness) report.witness = std::move(witness);
    return finish(report);
  });
}

PartialCensus low_weight_census_partial(const GraphCode& code, int wmax, const EnumerationOptions& options) {
  const int n = code.length();
  if (wmax < 0) throw std::invalid_argument("census weight must be >= 0");
  wmax = std::min(wmax, n);
  return detail::with_words(n, [&](auto wc) {
    constexpr int W = decltype(wc)::value;
    const PackedCode<W> packed(code);
    PartialCensus out;
    out.counts.counts.assign(static_cast<std::size_t>(wmax) + 1, 0);
    out.counts.counts[0] = 1;
    for (int level = 1; level <= wmax; ++level) {
      const auto cost = binomial(n, level);
      if (saturating_add(out.work, cost) > options.budget) {
        // Counts above the completed radius are incomplete.
        out.counts.counts.resize(static_cast<std::size_t>(out.radius) + 1);
        return out;
      }
      const auto scan = scan_census_level(packed, level, wmax, options.threads);
      out.work += scan.leaves;
      for (std::size_t w = 0; w < scan.counts.size(); ++w) out.counts.counts[w] += scan.counts[w];
      out.radius = level;
    }
    out.complete = true;
    return out;
  });
}

WeightDistribution low_weight_census(const GraphCode& code, int wmax, const EnumerationOptions& options) {
  auto partial = low_weight_census_partial(code, wmax, options);
  if (!partial.complete) {
    DistanceReport r;
    r.radius = partial.radius;
    r.work = partial.work;
    r.budget_exhausted = true;
    throw BudgetExceeded("census up to weight " + std::to_string(wmax) + " exceeds budget " +
                             std::to_string(options.budget) + " after radius " + std::to_string(partial.radius),
                         r);
  }
  return std::move(partial.counts);
}

}  // namespace mdcq
