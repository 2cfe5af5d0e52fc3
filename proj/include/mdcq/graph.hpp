#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdcq/bits.hpp"
#include "mdcq/dim.hpp"

namespace mdcq {

/// How a connection set that is not closed under negation is treated.
enum class NegationPolicy {
  close,   // add the missing negatives
  strict,  // reject with std::invalid_argument
};

/// Defining set S of an MDC graph: zero-free and closed under negation.
/// Elements are held as sorted lexicographic vertex indices.
class ConnectionSet {
 public:
  /// Empty set over `dim`.
  explicit ConnectionSet(DimVector dim);

  /// Takes already reduced indices; validates 0 not in S and S = -S.
  ConnectionSet(DimVector dim, std::vector<std::uint32_t> indices);

  const DimVector& dim() const { return dim_; }
  std::span<const std::uint32_t> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::uint32_t index) const { return member_.test(index); }
  std::vector<GroupElement> elements() const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.dim_ == b.dim_ && a.indices_ == b.indices_;
  }

 private:
  DimVector dim_;
  std::vector<std::uint32_t> indices_;
  BitVector member_;
};

/// Bracketed block-row form [s_1, ..., s_{n_1}]: row b lists the 1-based
/// columns set in the first row of block (0, b) of the adjacency matrix.
struct CompactConnectionSet {
  std::vector<std::vector<int>> rows;

  friend bool operator==(const CompactConnectionSet&, const CompactConnectionSet&) = default;
};

ConnectionSet validate_connection_set(const DimVector& dim, std::span<const GroupElement> raw,
                                      NegationPolicy policy);

/// Elements whose negatives are absent from `raw` (after reduction), i.e. what
/// NegationPolicy::close would add.
std::vector<GroupElement> missing_negations(const DimVector& dim, std::span<const GroupElement> raw);

ConnectionSet expand_compact(const DimVector& dim, const CompactConnectionSet& compact,
                             NegationPolicy policy = NegationPolicy::close);

/// Inverse of expand_compact: reads the first row of each of the first n_1 blocks.
CompactConnectionSet compact_of(const ConnectionSet& set);

/// Symmetric zero-diagonal regular 0/1 matrix of an MDC graph.
class AdjacencyMatrix {
 public:
  /// Checks symmetry, zero diagonal, regularity and the nested block
  /// circulant shape; throws std::invalid_argument otherwise.
  AdjacencyMatrix(DimVector dim, BitMatrix bits);

  const DimVector& dim() const { return dim_; }
  const BitMatrix& bits() const { return bits_; }
  std::size_t order() const { return bits_.order(); }
  int valency() const { return valency_; }
  bool operator()(std::size_t r, std::size_t c) const { return bits_(r, c); }

 private:
  DimVector dim_;
  BitMatrix bits_;
  int valency_ = 0;
};

AdjacencyMatrix build_adjacency(const ConnectionSet& set);

/// Gamma(N, S) with its adjacency matrix.
class MdcGraph {
 public:
  explicit MdcGraph(ConnectionSet set);

  const DimVector& dim() const { return conn_.dim(); }
  const ConnectionSet& connection() const { return conn_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  std::size_t order() const { return adjacency_.order(); }
  int valency() const { return static_cast<int>(conn_.size()); }

 private:
  ConnectionSet conn_;
  AdjacencyMatrix adjacency_;
};

MdcGraph complement(const MdcGraph& graph);

struct Partition {
  /// classes[i] holds the vertices whose first coordinate is i.
  std::vector<std::vector<std::uint32_t>> classes;
  /// 0 is not a first coordinate of any element of S.
  bool multipartite = false;
};

Partition partition_classes(const MdcGraph& graph);

/// True iff at every nesting level l each block of the level above splits into
/// n_l x n_l blocks, each block row being the previous one shifted right by one.
/// Throws std::invalid_argument if the matrix order differs from dim.order().
bool verify_nested_block_circulant(const BitMatrix& matrix, const DimVector& dim);

}  // namespace mdcq
