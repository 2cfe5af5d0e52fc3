#pragma once

// Bit-parallel enumeration kernels shared by the distance and search modules.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "mdcq/code.hpp"

namespace mdcq::detail {

inline constexpr int kMaxWords = 4;  // codes up to length 256

template <int W>
struct Word {
  std::array<std::uint64_t, W> w{};

  friend Word operator^(const Word& a, const Word& b) {
    Word r;
    for (int i = 0; i < W; ++i) r.w[i] = a.w[i] ^ b.w[i];
    return r;
  }
  friend Word operator|(const Word& a, const Word& b) {
    Word r;
    for (int i = 0; i < W; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
  }
  int popcount() const {
    int c = 0;
    for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
    return c;
  }
  bool any() const {
    for (int i = 0; i < W; ++i)
      if (w[i]) return true;
    return false;
  }
};

/// Z-block rows and unit vectors packed into fixed-width words.
template <int W>
struct PackedCode {
  int n = 0;
  std::vector<Word<W>> rows;
  std::vector<Word<W>> units;

  explicit PackedCode(const GraphCode& code) : n(code.length()), rows(static_cast<std::size_t>(n)), units(rows.size()) {
    for (int i = 0; i < n; ++i) {
      const auto words = code.z_block().row(static_cast<std::size_t>(i)).words();
      for (std::size_t k = 0; k < words.size(); ++k) rows[static_cast<std::size_t>(i)].w[k] = words[k];
      units[static_cast<std::size_t>(i)].w[static_cast<std::size_t>(i) >> 6] = std::uint64_t{1} << (i & 63);
    }
  }
};

inline int word_count(int n) {
  const int w = (n + 63) / 64;
  if (w < 1 || w > kMaxWords) throw std::invalid_argument("code length " + std::to_string(n) + " not supported (max 256)");
  return w;
}

/// Calls f(std::integral_constant<int, W>{}) with W = ceil(n / 64).
template <class F>
decltype(auto) with_words(int n, F&& f) {
  switch (word_count(n)) {
    case 1: return f(std::integral_constant<int, 1>{});
    case 2: return f(std::integral_constant<int, 2>{});
    case 3: return f(std::integral_constant<int, 3>{});
    default: return f(std::integral_constant<int, 4>{});
  }
}

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(task) for task in [0, tasks) on up to `threads` workers.
template <class Fn>
void parallel_tasks(int tasks, int threads, Fn&& fn) {
  threads = std::min(resolve_threads(threads), tasks);
  if (threads <= 1) {
    for (int t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i)
    pool.emplace_back([&] {
      for (int t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) fn(t);
    });
}

/// Visits every combination of exactly `level` indices whose smallest index
/// is `first`, in lexicographic order. For each one calls
/// leaf(weight, prefix, last) where prefix holds the first level-1 indices;
/// leaf returns false to stop. Returns false if stopped.
template <int W, class Leaf>
class LevelWalker {
 public:
  LevelWalker(const PackedCode<W>& code, int level, Leaf& leaf) : code_(code), level_(level), leaf_(leaf) {
    prefix_.resize(static_cast<std::size_t>(std::max(level, 1)));
  }

  bool run(int first) {
    prefix_[0] = first;
    const auto f = static_cast<std::size_t>(first);
    if (level_ == 1) return leaf_((code_.rows[f] | code_.units[f]).popcount(), std::span<const int>(), first);
    return descend(1, first + 1, code_.rows[f], code_.units[f]);
  }

 private:
  bool descend(int depth, int start, const Word<W>& z, const Word<W>& x) {
    const int n = code_.n;
    if (depth == level_ - 1) {
      const std::span<const int> prefix(prefix_.data(), static_cast<std::size_t>(depth));
      for (int j = start; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const int weight = ((z ^ code_.rows[uj]) | x | code_.units[uj]).popcount();
        if (!leaf_(weight, prefix, j)) return false;
      }
      return true;
    }
    const int stop = n - (level_ - depth) + 1;
    for (int j = start; j < stop; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      prefix_[static_cast<std::size_t>(depth)] = j;
      if (!descend(depth + 1, j + 1, z ^ code_.rows[uj], x | code_.units[uj])) return false;
    }
    return true;
  }

  const PackedCode<W>& code_;
  int level_;
  Leaf& leaf_;
  std::vector<int> prefix_;
};

}  // namespace mdcq::detail
