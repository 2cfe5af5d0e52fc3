#include "mdcq/bits.hpp"

#include <stdexcept>
#include <utility>

namespace mdcq {

BitVector BitVector::from_indices(std::size_t size, std::span<const int> indices) {
  BitVector v(size);
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= size)
      throw std::out_of_range("bit index " + std::to_string(i) + " outside vector of size " +
                              std::to_string(size));
    v.set(static_cast<std::size_t>(i));
  }
  return v;
}

std::vector<int> BitVector::indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

void BitVector::clear_tail() {
  if (size_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

bool BitMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < order(); ++r)
    for (std::size_t c = r + 1; c < order(); ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool BitMatrix::has_zero_diagonal() const {
  for (std::size_t r = 0; r < order(); ++r)
    if ((*this)(r, r)) return false;
  return true;
}

int gf2_rank(std::vector<BitVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && rows[r].test(c)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

}  // namespace mdcq
