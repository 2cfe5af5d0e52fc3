#include "mdcq/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mdcq {

ConnectionSet::ConnectionSet(DimVector dim) : dim_(std::move(dim)), member_(dim_.order()) {}

ConnectionSet::ConnectionSet(DimVector dim, std::vector<std::uint32_t> indices)
    : dim_(std::move(dim)), indices_(std::move(indices)), member_(dim_.order()) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (auto i : indices_) {
    if (i >= dim_.order()) throw std::invalid_argument("connection index out of range");
    if (i == 0) throw std::invalid_argument("connection set contains the zero element");
    member_.set(i);
  }
  for (auto i : indices_)
    if (!member_.test(dim_.negate(i)))
      throw std::invalid_argument("connection set is not closed under negation: " +
                                  to_string(dim_.decode(i)) + " present but " +
                                  to_string(dim_.decode(dim_.negate(i))) + " missing");
}

std::vector<GroupElement> ConnectionSet::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(dim_.decode(i));
  return out;
}

std::vector<GroupElement> missing_negations(const DimVector& dim, std::span<const GroupElement> raw) {
  BitVector present(dim.order());
  std::vector<std::uint32_t> idx;
  for (const auto& g : raw) {
    idx.push_back(dim.encode(g));
    present.set(idx.back());
  }
  std::vector<GroupElement> out;
  BitVector reported(dim.order());
  for (auto i : idx) {
    const auto neg = dim.negate(i);
    if (!present.test(neg) && !reported.test(neg)) {
      reported.set(neg);
      out.push_back(dim.decode(neg));
    }
  }
  return out;
}

ConnectionSet validate_connection_set(const DimVector& dim, std::span<const GroupElement> raw,
                                      NegationPolicy policy) {
  std::vector<std::uint32_t> idx;
  idx.reserve(raw.size() * 2);
  for (const auto& g : raw) {
    const auto i = dim.encode(g);
    if (i == 0) throw std::invalid_argument("connection set contains the zero element");
    idx.push_back(i);
  }
  if (policy == NegationPolicy::close) {
    const std::size_t original = idx.size();
    for (std::size_t k = 0; k < original; ++k) idx.push_back(dim.negate(idx[k]));
  }
  return ConnectionSet(dim, std::move(idx));
}

namespace {

// Column p (1-based) of block b corresponds to vertex (b, lex-decode(p - 1)).
std::uint32_t compact_index(const DimVector& dim, int block, int position) {
  return static_cast<std::uint32_t>(block) * dim.stride(0) + static_cast<std::uint32_t>(position - 1);
}

}  // namespace

ConnectionSet expand_compact(const DimVector& dim, const CompactConnectionSet& compact, NegationPolicy policy) {
  const int blocks = dim.modulus(0);
  const auto width = static_cast<int>(dim.stride(0));
  if (static_cast<int>(compact.rows.size()) != blocks)
    throw std::invalid_argument("compact set has " + std::to_string(compact.rows.size()) +
                                " block rows, expected n_1 = " + std::to_string(blocks));
  std::vector<GroupElement> raw;
  for (int b = 0; b < blocks; ++b) {
    for (int p : compact.rows[static_cast<std::size_t>(b)]) {
      if (p < 1 || p > width)
        throw std::invalid_argument("compact position " + std::to_string(p) + " in block " + std::to_string(b + 1) +
                                    " outside [1, " + std::to_string(width) + "]");
      raw.push_back(dim.decode(compact_index(dim, b, p)));
    }
  }
  return validate_connection_set(dim, raw, policy);
}

CompactConnectionSet compact_of(const ConnectionSet& set) {
  const auto& dim = set.dim();
  CompactConnectionSet out;
  out.rows.resize(static_cast<std::size_t>(dim.modulus(0)));
  for (auto i : set.indices()) {
    const auto block = i / dim.stride(0);
    out.rows[block].push_back(static_cast<int>(i % dim.stride(0)) + 1);
  }
  return out;
}

AdjacencyMatrix::AdjacencyMatrix(DimVector dim, BitMatrix bits) : dim_(std::move(dim)), bits_(std::move(bits)) {
  if (bits_.order() != dim_.order()) throw std::invalid_argument("adjacency order does not match dimension vector");
  if (!bits_.is_symmetric()) throw std::invalid_argument("adjacency matrix is not symmetric");
  if (!bits_.has_zero_diagonal()) throw std::invalid_argument("adjacency matrix has a nonzero diagonal");
  valency_ = bits_.order() ? bits_.row(0).popcount() : 0;
  for (const auto& r : bits_.rows())
    if (r.popcount() != valency_) throw std::invalid_argument("adjacency matrix is not regular");
  if (!verify_nested_block_circulant(bits_, dim_))
    throw std::invalid_argument("adjacency matrix is not nested block circulant");
}

AdjacencyMatrix build_adjacency(const ConnectionSet& set) {
  const auto& dim = set.dim();
  const auto n = dim.order();
  BitMatrix bits(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (auto s : set.indices()) bits.set(u, dim.subtract(u, s));
  return AdjacencyMatrix(dim, std::move(bits));
}

MdcGraph::MdcGraph(ConnectionSet set) : conn_(std::move(set)), adjacency_(build_adjacency(conn_)) {}

MdcGraph complement(const MdcGraph& graph) {
  const auto& dim = graph.dim();
  std::vector<std::uint32_t> rest;
  for (std::uint32_t i = 1; i < dim.order(); ++i)
    if (!graph.connection().contains(i)) rest.push_back(i);
  return MdcGraph(ConnectionSet(dim, std::move(rest)));
}

Partition partition_classes(const MdcGraph& graph) {
  const auto& dim = graph.dim();
  Partition p;
  p.classes.resize(static_cast<std::size_t>(dim.modulus(0)));
  for (std::uint32_t v = 0; v < dim.order(); ++v) p.classes[v / dim.stride(0)].push_back(v);
  p.multipartite = std::none_of(graph.connection().indices().begin(), graph.connection().indices().end(),
                                [&](std::uint32_t s) { return dim.coordinate(s, 0) == 0; });
  return p;
}

bool verify_nested_block_circulant(const BitMatrix& matrix, const DimVector& dim) {
  const auto n = dim.order();
  if (matrix.order() != n)
    throw std::invalid_argument("matrix order " + std::to_string(matrix.order()) + " does not match " +
                                dim.to_string());
  for (int level = 0; level < dim.rank(); ++level) {
    const auto stride = dim.stride(level);
    const auto m = static_cast<std::uint32_t>(dim.modulus(level));
    // Advance coordinate `level` by one, wrapping inside its parent block.
    auto shift = [&](std::uint32_t v) {
      const auto c = (v / stride) % m;
      return c + 1 == m ? v - c * stride : v + stride;
    };
    for (std::uint32_t u = 0; u < n; ++u) {
      const auto su = shift(u);
      for (std::uint32_t v = 0; v < n; ++v)
        if (matrix(u, v) != matrix(su, shift(v))) return false;
    }
  }
  return true;
}

}  // namespace mdcq
