#include "mdcq/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "kernel.hpp"
#include "mdcq/iso.hpp"

namespace mdcq {

std::vector<std::vector<std::uint32_t>> negation_orbits(const DimVector& dim) {
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<bool> seen(dim.order(), false);
  for (std::uint32_t g = 1; g < dim.order(); ++g) {
    if (seen[g]) continue;
    const auto neg = dim.negate(g);
    seen[g] = seen[neg] = true;
    if (neg == g) {
      orbits.push_back({g});
    } else {
      orbits.push_back({g, neg});
    }
  }
  return orbits;
}

ConnectionSet connection_set_from_mask(const DimVector& dim, const std::vector<std::vector<std::uint32_t>>& orbits,
                                       std::uint64_t mask) {
  std::vector<std::uint32_t> idx;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if ((mask >> i) & 1u) idx.insert(idx.end(), orbits[i].begin(), orbits[i].end());
  return ConnectionSet(dim, std::move(idx));
}

void enumerate_connection_sets(const DimVector& dim, const EnumerateOptions& options,
                               const std::function<bool(const ConnectionSet&)>& visit) {
  const auto orbits = negation_orbits(dim);
  if (orbits.size() > 62)
    throw std::invalid_argument(dim.to_string() + " has " + std::to_string(orbits.size()) +
                                " negation orbits; exhaustive enumeration supports at most 62");
  const std::uint64_t end = std::uint64_t{1} << orbits.size();
  for (std::uint64_t mask = options.include_empty ? 0 : 1; mask < end; ++mask) {
    auto set = connection_set_from_mask(dim, orbits, mask);
    if (options.dedup && !(canonical_form(set) == set)) continue;
    if (!visit(set)) return;
  }
}

namespace {

struct ClassifyPart {
  int d_max[2] = {0, 0};         // by type: [0] = I, [1] = II
  std::vector<int> exact;        // exact d for sets evaluated past the threshold, else 0
  std::uint64_t work = 0;
  bool partial = false;
};

}  // namespace

ClassificationRow classify(const DimVector& dim, const ClassifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<ConnectionSet> sets;
  enumerate_connection_sets(dim, {.dedup = options.dedup, .include_empty = false}, [&](const ConnectionSet& s) {
    sets.push_back(s);
    return true;
  });
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(sets.begin(), sets.end(), rng);
  }

  const int threads = detail::resolve_threads(options.threads);
  const int chunks = std::max(1, std::min<int>(static_cast<int>(sets.size()), threads * 4));
  std::vector<ClassifyPart> parts(static_cast<std::size_t>(chunks));
  detail::parallel_tasks(chunks, threads, [&](int chunk) {
    auto& part = parts[static_cast<std::size_t>(chunk)];
    const std::size_t begin = sets.size() * static_cast<std::size_t>(chunk) / static_cast<std::size_t>(chunks);
    const std::size_t end = sets.size() * static_cast<std::size_t>(chunk + 1) / static_cast<std::size_t>(chunks);
    part.exact.assign(end - begin, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const auto& set = sets[i];
      const int type = set.size() % 2 == 1 ? 1 : 0;
      const GraphCode code = code_from_graph(build_adjacency(set));
      const int threshold = std::max(part.d_max[type], 1);
      if (combinations_up_to(code.length(), threshold - 1) > options.budget) {
        part.partial = true;
        continue;
      }
      part.work += combinations_up_to(code.length(), threshold - 1);
      if (!min_distance_at_least(code, threshold, 1)) continue;
      try {
        const auto report = min_distance_exact(code, {.budget = options.budget, .threads = 1});
        part.work += report.work;
        part.exact[i - begin] = report.lower;
        part.d_max[type] = std::max(part.d_max[type], report.lower);
      } catch (const BudgetExceeded& e) {
        part.work += e.partial().work;
        part.partial = true;
      }
    }
  });

  ClassificationRow row{dim};
  row.sets = sets.size();
  for (const auto& p : parts) {
    row.d_max_type1 = std::max(row.d_max_type1, p.d_max[0]);
    row.d_max_type2 = std::max(row.d_max_type2, p.d_max[1]);
    row.work += p.work;
    row.partial = row.partial || p.partial;
  }
  row.d_max = std::max(row.d_max_type1, row.d_max_type2);
  for (const auto& p : parts)
    row.count += static_cast<std::uint64_t>(std::count(p.exact.begin(), p.exact.end(), row.d_max));
  row.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return row;
}

std::vector<SearchRecord> random_search(const DimVector& dim, const RandomSearchOptions& options) {
  if (options.iterations == 0) return {};
  const auto orbits = negation_orbits(dim);
  if (orbits.size() > 64) throw std::invalid_argument("random search supports at most 64 negation orbits");
  const auto singleton = std::find_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.size() == 1; });
  if (options.type2_only && singleton == orbits.end()) return {};  // every valency is even

  std::mt19937_64 rng(options.seed);
  std::vector<std::uint64_t> masks(options.iterations);
  const std::uint64_t all = orbits.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << orbits.size()) - 1;
  for (auto& mask : masks) {
    mask = rng() & all;
    if (options.type2_only) {
      std::size_t valency = 0;
      for (std::size_t i = 0; i < orbits.size(); ++i)
        if ((mask >> i) & 1u) valency += orbits[i].size();
      if (valency % 2 == 0) mask ^= std::uint64_t{1} << (singleton - orbits.begin());
    }
  }

  std::vector<std::optional<SearchRecord>> results(masks.size());
  detail::parallel_tasks(static_cast<int>(masks.size()), options.threads, [&](int it) {
    const auto mask = masks[static_cast<std::size_t>(it)];
    if (mask == 0) return;
    auto set = connection_set_from_mask(dim, orbits, mask);
    const MdcGraph graph(set);
    const GraphCode code = code_from_graph(graph.adjacency());
    if (combinations_up_to(code.length(), options.target_d - 1) > options.budget) return;
    if (!min_distance_at_least(code, options.target_d, 1)) return;
    SearchRecord rec{.set = set,
                     .compact = compact_of(set),
                     .valency = graph.valency(),
                     .type = code_type(graph),
                     .distance = distance_bounds(code, code.length(),
                                                 {.budget = options.budget, .threads = 1, .restarts = 16,
                                                  .seed = options.seed ^ static_cast<std::uint64_t>(it)}),
                     .fingerprint = {},
                     .iteration = static_cast<std::uint64_t>(it)};
    if (combinations_up_to(code.length(), rec.distance.lower) <= options.budget)
      rec.fingerprint = fingerprint(code, rec.distance.lower, {.budget = options.budget, .threads = 1});
    results[static_cast<std::size_t>(it)] = std::move(rec);
  });

  std::vector<SearchRecord> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

std::vector<std::uint64_t> fingerprint(const GraphCode& code, int upto, const EnumerationOptions& options) {
  return low_weight_census(code, upto, options).counts;
}

bool ManifestResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ManifestResult verify_entry(const ManifestEntry& entry, const EnumerationOptions& options) {
  ManifestResult result{.name = entry.name, .checks = {}};
  auto add = [&](std::string name, bool ok, std::string detail) {
    result.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  std::optional<MdcGraph> graph;
  try {
    graph.emplace(expand_compact(entry.dim, entry.compact,
                                 entry.close_negation ? NegationPolicy::close : NegationPolicy::strict));
    add("build", true, "order " + std::to_string(graph->order()));
  } catch (const std::exception& e) {
    add("build", false, e.what());
    return result;
  }
  const GraphCode code = code_from_graph(graph->adjacency());
  add("self_dual", is_self_dual(code), "");

  if (entry.valency)
    add("valency", graph->valency() == *entry.valency,
        "got " + std::to_string(graph->valency()) + ", expected " + std::to_string(*entry.valency));
  if (entry.type) {
    const auto t = code_type(*graph);
    add("type", t == *entry.type, std::string("got ") + to_string(t) + ", expected " + to_string(*entry.type));
  }
  if (entry.d) {
    try {
      const auto r = min_distance_exact(code, options);
      add("d", r.lower == *entry.d, "got " + std::to_string(r.lower) + ", expected " + std::to_string(*entry.d));
    } catch (const BudgetExceeded& e) {
      result.budget_exhausted = true;
      add("d", false, std::string("budget exhausted: ") + e.what());
    }
  }
  if (entry.d_at_least) {
    const auto r = distance_bounds(code, *entry.d_at_least - 1,
                                   {.budget = options.budget, .threads = options.threads, .restarts = 0});
    if (r.budget_exhausted) result.budget_exhausted = true;
    add("d_at_least", r.lower >= *entry.d_at_least,
        "certified d >= " + std::to_string(r.lower) + " at radius " + std::to_string(r.radius) + ", expected >= " +
            std::to_string(*entry.d_at_least));
  }
  if (!entry.weights.empty()) {
    int wmax = 0;
    for (auto [w, c] : entry.weights) wmax = std::max(wmax, w);
    const auto census = low_weight_census_partial(code, wmax, options);
    if (!census.complete) result.budget_exhausted = true;
    for (auto [w, expected] : entry.weights) {
      const std::string name = "W" + std::to_string(w);
      if (w > census.radius) {
        add(name, false, "budget exhausted at radius " + std::to_string(census.radius));
      } else {
        const auto got = census.counts[static_cast<std::size_t>(w)];
        add(name, got == expected, "got " + std::to_string(got) + ", expected " + std::to_string(expected));
      }
    }
  }
  return result;
}

}  // namespace mdcq
