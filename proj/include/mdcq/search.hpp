#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdcq/code.hpp"
#include "mdcq/distance.hpp"
#include "mdcq/graph.hpp"

namespace mdcq {

/// Orbits of V \ {0} under g -> -g, in order of their smallest index.
/// Self-inverse elements form singleton orbits.
std::vector<std::vector<std::uint32_t>> negation_orbits(const DimVector& dim);

/// Union of the orbits selected by `mask` (bit i selects orbit i).
ConnectionSet connection_set_from_mask(const DimVector& dim, const std::vector<std::vector<std::uint32_t>>& orbits,
                                       std::uint64_t mask);

struct EnumerateOptions {
  bool dedup = false;          // emit canonical_form representatives only
  bool include_empty = false;  // also emit S = {}
};

/// Streams every inverse-closed zero-free subset (include/exclude per
/// negation orbit) in increasing orbit-mask order. The callback returns false
/// to stop early. Throws std::invalid_argument above 62 orbits.
void enumerate_connection_sets(const DimVector& dim, const EnumerateOptions& options,
                               const std::function<bool(const ConnectionSet&)>& visit);

struct ClassificationRow {
  DimVector dim;
  int d_max = 0;
  /// Sets reaching d_max (up to canonical form when deduplicating).
  std::uint64_t count = 0;
  int d_max_type1 = 0;  // best over even-valency sets, 0 if none
  int d_max_type2 = 0;  // best over odd-valency sets, 0 if none
  std::uint64_t sets = 0;
  std::uint64_t work = 0;
  bool partial = false;  // budget ran out; some sets were not evaluated
  double elapsed_seconds = 0;
};

struct ClassifyOptions {
  std::uint64_t budget = kDefaultWorkBudget;  // per code
  int threads = 0;
  bool dedup = true;
  /// Evaluate sets in a seeded random order (result must not change).
  std::optional<std::uint64_t> shuffle_seed;
};

/// d_max over all connection sets of `dim`, pruned with a rising threshold.
ClassificationRow classify(const DimVector& dim, const ClassifyOptions& options = {});

struct SearchRecord {
  ConnectionSet set;
  CompactConnectionSet compact;
  int valency = 0;
  CodeType type = CodeType::I;
  DistanceReport distance;
  std::vector<std::uint64_t> fingerprint;  // W_0..W_lower when affordable
  std::uint64_t iteration = 0;
};

struct RandomSearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t iterations = 0;
  int target_d = 1;
  bool type2_only = false;  // force odd valency
  std::uint64_t budget = kDefaultWorkBudget;  // per candidate
  int threads = 0;
};

/// Seeded search. Iteration i draws one uniform bit per negation orbit from a
/// std::mt19937_64 seeded with `seed`; with type2_only the first self-inverse
/// orbit is toggled when the valency comes out even. Candidates passing
/// min_distance_at_least(target_d) are kept, ordered by iteration.
std::vector<SearchRecord> random_search(const DimVector& dim, const RandomSearchOptions& options);

/// (W_0, ..., W_upto). Distinct fingerprints certify inequivalent codes.
std::vector<std::uint64_t> fingerprint(const GraphCode& code, int upto,
                                       const EnumerationOptions& options = {});

/// One line of a reproduction manifest.
struct ManifestEntry {
  std::string name;
  DimVector dim;
  CompactConnectionSet compact;
  bool close_negation = false;
  std::optional<int> valency;
  std::optional<CodeType> type;
  std::optional<int> d;
  std::optional<int> d_at_least;
  std::vector<std::pair<int, std::uint64_t>> weights;  // (w, W_w)
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ManifestResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool budget_exhausted = false;
  bool passed() const;
};

/// Builds the graph and code, then checks self-duality plus every expectation.
/// Failed expectations are reported, not thrown.
ManifestResult verify_entry(const ManifestEntry& entry, const EnumerationOptions& options = {});

}  // namespace mdcq
