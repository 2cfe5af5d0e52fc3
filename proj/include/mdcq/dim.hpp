#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mdcq {

/// Element of Z_{n_1} x ... x Z_{n_k}. Coordinates are reduced once a
/// DimVector has seen them (see DimVector::reduce).
struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);

/// The moduli (n_1, ..., n_k) of the vertex group.
///
/// Vertices are indexed lexicographically with the first coordinate most
/// significant, so vertex (c_1, ..., c_k) has index
/// ((c_1 n_2 + c_2) n_3 + c_3) ... . Every matrix statement in the library
/// depends on this ordering.
class DimVector {
 public:
  /// Throws std::invalid_argument if the list is empty, a modulus is < 2, or
  /// the product would overflow 32 bits.
  explicit DimVector(std::vector<int> moduli);

  std::span<const int> moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  int modulus(int j) const { return moduli_[static_cast<std::size_t>(j)]; }
  std::uint32_t order() const { return order_; }
  /// Number of vertices sharing one value of coordinates 0..j, i.e. the
  /// product of the moduli after position j.
  std::uint32_t stride(int j) const { return strides_[static_cast<std::size_t>(j)]; }

  GroupElement reduce(const GroupElement& g) const;
  std::uint32_t encode(const GroupElement& g) const;
  GroupElement decode(std::uint32_t index) const;
  int coordinate(std::uint32_t index, int j) const {
    return static_cast<int>((index / strides_[static_cast<std::size_t>(j)]) %
                            static_cast<std::uint32_t>(moduli_[static_cast<std::size_t>(j)]));
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t subtract(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t negate(std::uint32_t a) const;

  std::string to_string() const;

  friend bool operator==(const DimVector& a, const DimVector& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<int> moduli_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t order_ = 1;
};

}  // namespace mdcq
