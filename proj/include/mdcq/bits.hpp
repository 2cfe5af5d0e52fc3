#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mdcq {

/// Fixed-length bit vector packed into 64-bit words. Bit i lives in word
/// i / 64 at position i % 64; bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_indices(std::size_t size, std::span<const int> indices);

  std::size_t size() const { return size_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  int popcount() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::vector<int> indices() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector operator~() const;

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// "0110..." with bit 0 first.
  std::string to_string() const;

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Square matrix over GF(2) stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t order) : rows_(order, BitVector(order)) {}

  std::size_t order() const { return rows_.size(); }
  bool operator()(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  std::span<const BitVector> rows() const { return rows_; }

  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVector> rows_;
};

/// Rank of a list of equal-length rows over GF(2).
int gf2_rank(std::vector<BitVector> rows);

}  // namespace mdcq
