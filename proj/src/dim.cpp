#include "mdcq/dim.hpp"

#include <limits>
#include <stdexcept>

namespace mdcq {

std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.coords[i]);
  }
  return s + ")";
}

DimVector::DimVector(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("dimension vector must have at least one modulus");
  std::uint64_t product = 1;
  for (int m : moduli_) {
    if (m < 2) throw std::invalid_argument("every modulus must be >= 2, got " + std::to_string(m));
    product *= static_cast<std::uint64_t>(m);
    if (product > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("group order exceeds 2^32");
  }
  order_ = static_cast<std::uint32_t>(product);
  strides_.assign(moduli_.size(), 1);
  for (int j = rank() - 2; j >= 0; --j)
    strides_[static_cast<std::size_t>(j)] =
        strides_[static_cast<std::size_t>(j) + 1] * static_cast<std::uint32_t>(moduli_[static_cast<std::size_t>(j) + 1]);
}

GroupElement DimVector::reduce(const GroupElement& g) const {
  if (g.coords.size() != moduli_.size())
    throw std::invalid_argument("element " + mdcq::to_string(g) + " has " + std::to_string(g.coords.size()) +
                                " coordinates, expected " + std::to_string(moduli_.size()));
  GroupElement out = g;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const int m = moduli_[j];
    out.coords[j] = ((out.coords[j] % m) + m) % m;
  }
  return out;
}

std::uint32_t DimVector::encode(const GroupElement& g) const {
  const GroupElement r = reduce(g);
  std::uint32_t index = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j)
    index = index * static_cast<std::uint32_t>(moduli_[j]) + static_cast<std::uint32_t>(r.coords[j]);
  return index;
}

GroupElement DimVector::decode(std::uint32_t index) const {
  if (index >= order_) throw std::out_of_range("vertex index out of range");
  GroupElement g;
  g.coords.resize(moduli_.size());
  for (int j = rank() - 1; j >= 0; --j) {
    const auto m = static_cast<std::uint32_t>(moduli_[static_cast<std::size_t>(j)]);
    g.coords[static_cast<std::size_t>(j)] = static_cast<int>(index % m);
    index /= m;
  }
  return g;
}

std::uint32_t DimVector::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    const auto m = static_cast<std::uint32_t>(moduli_[static_cast<std::size_t>(j)]);
    out = out * m + (static_cast<std::uint32_t>(coordinate(a, j) + coordinate(b, j)) % m);
  }
  return out;
}

std::uint32_t DimVector::subtract(std::uint32_t a, std::uint32_t b) const { return add(a, negate(b)); }

std::uint32_t DimVector::negate(std::uint32_t a) const {
  std::uint32_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    const auto m = static_cast<std::uint32_t>(moduli_[static_cast<std::size_t>(j)]);
    out = out * m + (m - static_cast<std::uint32_t>(coordinate(a, j))) % m;
  }
  return out;
}

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(moduli_[i]);
  }
  return s + ")";
}

}  // namespace mdcq
