#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mdcq/code.hpp"

namespace mdcq {

/// W_0..W_r; r = n for a full distribution, smaller for a census prefix.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t operator[](std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
  int max_weight() const { return static_cast<int>(counts.size()) - 1; }
  /// Sum of counts (saturating only past 2^64, which no supported n reaches).
  std::uint64_t total() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Minimum-distance result. Every combination of popcount <= radius has been
/// visited, so lower = min(best weight seen, radius + 1) is certified because a
/// codeword's weight is at least the popcount of its combination.
struct DistanceReport {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  int radius = 0;
  std::uint64_t work = 0;     // combinations visited by exhaustive levels
  std::uint64_t sampled = 0;  // codewords evaluated by randomized search
  bool budget_exhausted = false;
  /// First minimum-weight combination in enumeration order, when requested.
  std::optional<std::vector<int>> witness;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, DistanceReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const DistanceReport& partial() const { return partial_; }

 private:
  DistanceReport partial_;
};

/// 2^34 combinations: default exhaustive-enumeration budget.
inline constexpr std::uint64_t kDefaultWorkBudget = std::uint64_t{1} << 34;
inline constexpr int kDefaultFullEnumerationCap = 36;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultWorkBudget;
  int threads = 0;  // 0: hardware concurrency
  bool witness = false;
};

struct BoundsOptions {
  std::uint64_t budget = kDefaultWorkBudget;
  int threads = 0;
  int restarts = 64;  // randomized local-search restarts for the upper bound
  std::uint64_t seed = 0;
  bool witness = false;
};

/// popcount(x | z).
int symplectic_weight(const SymplecticVector& v);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Sum of C(n, w) for 1 <= w <= radius, saturating.
std::uint64_t combinations_up_to(int n, int radius);

/// Exact distribution by Gray-code iteration over all 2^n combinations.
/// Throws std::invalid_argument if n > cap.
WeightDistribution weight_distribution_full(const GraphCode& code, int cap = kDefaultFullEnumerationCap,
                                            int threads = 0);

/// Single-threaded Gray walk bookkeeping for tests: number of combinations
/// visited and whether the accumulator is back at zero afterwards.
struct GrayWalkStats {
  std::uint64_t visits = 0;
  bool returned_to_zero = false;
};
GrayWalkStats gray_walk_stats(const GraphCode& code);

/// Ascending-popcount enumeration; stops once the current popcount reaches
/// the best weight found. Throws BudgetExceeded when the next level would
/// push the visited count past options.budget.
DistanceReport min_distance_exact(const GraphCode& code, const EnumerationOptions& options = {});

/// True iff every nonzero codeword has weight >= target. Aborts on the first
/// counterexample.
bool min_distance_at_least(const GraphCode& code, int target, int threads = 0);

/// Exhausts popcount levels 1..radius (as far as the budget allows) for a
/// certified lower bound, then tightens the upper bound by seeded local search.
DistanceReport distance_bounds(const GraphCode& code, int radius, const BoundsOptions& options = {});

/// W_0..W_wmax, exact: a codeword of weight <= wmax comes from a combination
/// of popcount <= wmax. Throws BudgetExceeded.
WeightDistribution low_weight_census(const GraphCode& code, int wmax, const EnumerationOptions& options = {});

/// Census that stops at the budget instead of throwing; counts are exact up
/// to `radius`.
struct PartialCensus {
  WeightDistribution counts;
  int radius = 0;
  bool complete = false;
  std::uint64_t work = 0;
};
PartialCensus low_weight_census_partial(const GraphCode& code, int wmax, const EnumerationOptions& options = {});

}  // namespace mdcq
