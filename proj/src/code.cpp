#include "mdcq/code.hpp"

#include <stdexcept>
#include <string>

namespace mdcq {

char F4Element::symbol() const {
  if (x) return z ? 'W' : 'w';
  return z ? '1' : '0';
}

F4Element F4Element::from_symbol(char c) {
  switch (c) {
    case '0': return zero();
    case '1': return one();
    case 'w': return omega();
    case 'W': return omega2();
    default: throw std::invalid_argument(std::string("not a GF(4) symbol: ") + c);
  }
}

// (a w + b)(c w + d) = (ac + ad + bc) w + (ac + bd), using w^2 = w + 1.
F4Element operator*(F4Element u, F4Element v) {
  const bool ac = u.x && v.x;
  const bool ad = u.x && v.z;
  const bool bc = u.z && v.x;
  const bool bd = u.z && v.z;
  return {static_cast<bool>(ac ^ ad ^ bc), static_cast<bool>(ac ^ bd)};
}

std::vector<F4Element> SymplecticVector::to_f4() const {
  std::vector<F4Element> out(length());
  for (std::size_t i = 0; i < length(); ++i) out[i] = {x.test(i), z.test(i)};
  return out;
}

SymplecticVector SymplecticVector::from_f4(std::span<const F4Element> v) {
  SymplecticVector out{BitVector(v.size()), BitVector(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.x.set(i, v[i].x);
    out.z.set(i, v[i].z);
  }
  return out;
}

int trace_inner_product(std::span<const F4Element> u, std::span<const F4Element> v) {
  if (u.size() != v.size()) throw std::invalid_argument("trace inner product of vectors with different lengths");
  F4Element sum = F4Element::zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto a = u[i];
    const auto b = v[i];
    sum = sum + a * (b * b) + (a * a) * b;
  }
  if (sum.x) throw std::logic_error("trace inner product left the prime field");
  return sum.z ? 1 : 0;
}

int symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
  if (u.length() != v.length()) throw std::invalid_argument("symplectic product of vectors with different lengths");
  return ((u.x & v.z).popcount() + (v.x & u.z).popcount()) & 1;
}

GraphCode::GraphCode(BitMatrix z_block) : z_(std::move(z_block)) {
  if (!z_.is_symmetric()) throw std::invalid_argument("graph code needs a symmetric adjacency matrix");
  if (!z_.has_zero_diagonal()) throw std::invalid_argument("graph code needs a zero diagonal");
}

GraphCode GraphCode::unchecked(BitMatrix z_block) { return GraphCode(std::move(z_block), NoCheck{}); }

SymplecticVector GraphCode::generator(int i) const {
  const auto n = static_cast<std::size_t>(length());
  SymplecticVector g{BitVector(n), z_.row(static_cast<std::size_t>(i))};
  g.x.set(static_cast<std::size_t>(i));
  return g;
}

SymplecticVector GraphCode::codeword(const BitVector& combination) const {
  const auto n = static_cast<std::size_t>(length());
  if (combination.size() != n)
    throw std::invalid_argument("combination has length " + std::to_string(combination.size()) + ", code has length " +
                                std::to_string(n));
  SymplecticVector out{combination, BitVector(n)};
  for (int i : combination.indices()) out.z ^= z_.row(static_cast<std::size_t>(i));
  return out;
}

GraphCode code_from_graph(const AdjacencyMatrix& adjacency) { return GraphCode(adjacency.bits()); }

bool is_self_dual(const GraphCode& code) {
  const int n = code.length();
  std::vector<SymplecticVector> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gens.push_back(code.generator(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (symplectic_product(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)])) return false;
  std::vector<BitVector> stacked;
  for (const auto& g : gens) {
    BitVector row(2 * static_cast<std::size_t>(n));
    for (int i : g.x.indices()) row.set(static_cast<std::size_t>(i));
    for (int i : g.z.indices()) row.set(static_cast<std::size_t>(n + i));
    stacked.push_back(std::move(row));
  }
  return gf2_rank(std::move(stacked)) == n;
}

const char* to_string(CodeType t) { return t == CodeType::II ? "II" : "I"; }

CodeType code_type(const MdcGraph& graph) { return graph.valency() % 2 == 1 ? CodeType::II : CodeType::I; }

CodeType code_type_by_enumeration(const GraphCode& code) {
  const int n = code.length();
  if (n > 24) throw std::invalid_argument("full enumeration limited to n <= 24");
  SymplecticVector acc{BitVector(static_cast<std::size_t>(n)), BitVector(static_cast<std::size_t>(n))};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    acc.x.flip(static_cast<std::size_t>(bit));
    acc.z ^= code.z_block().row(static_cast<std::size_t>(bit));
    if ((acc.x | acc.z).popcount() % 2 == 1) return CodeType::I;
  }
  return CodeType::II;
}

std::string generator_text(const GraphCode& code) {
  std::string out;
  for (int i = 0; i < code.length(); ++i) {
    for (const auto& e : code.generator(i).to_f4()) out += e.symbol();
    out += '\n';
  }
  return out;
}

std::string symplectic_matrix_text(const GraphCode& code) {
  std::string out;
  for (int i = 0; i < code.length(); ++i) {
    const auto g = code.generator(i);
    out += g.x.to_string() + "|" + g.z.to_string() + "\n";
  }
  return out;
}

}  // namespace mdcq
