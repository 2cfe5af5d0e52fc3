#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdcq/bits.hpp"
#include "mdcq/graph.hpp"

namespace mdcq {

/// C(n, S) on Z_n; `connection` sorted, zero-free and closed under s -> -s.
struct CirculantSpec {
  int order = 0;
  std::vector<int> connection;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

BitMatrix circulant_adjacency(const CirculantSpec& spec);

/// Gamma(m, n, alpha, S_0, ..., S_{m/2}) with parts[k] = S_k.
struct MetacirculantSpec {
  int m = 0;
  int n = 0;
  int alpha = 1;
  std::vector<std::vector<int>> parts;

  friend bool operator==(const MetacirculantSpec&, const MetacirculantSpec&) = default;
};

/// S_0 = -S_0, 0 not in S_0, alpha^m S_k = S_k, and alpha^{m/2} S_{m/2} = -S_{m/2} for even m.
bool satisfies_metacirculant_conditions(const MetacirculantSpec& spec);

/// Vertex (i, j) has index i*n + j; (i, j) ~ (i+k, h) iff h - j in alpha^i S_k.
BitMatrix metacirculant_adjacency(const MetacirculantSpec& spec);

/// True iff map is a bijection with a(u, v) == b(map[u], map[v]) for all u, v.
bool is_isomorphism(const BitMatrix& a, const BitMatrix& b, std::span<const std::uint32_t> map);

/// Vertex map of the coprime collapse, (x, y) -> n x + m y mod mn folded
/// left to right over the coordinates. Requires pairwise coprime moduli.
std::vector<std::uint32_t> coprime_vertex_map(const DimVector& dim);

/// Image of S under the coprime collapse. Rank-1 inputs pass through.
/// Throws std::invalid_argument if the moduli are not pairwise coprime.
CirculantSpec coprime_collapse(const ConnectionSet& set);

std::vector<std::uint32_t> unit_vertex_map(const DimVector& dim, std::span<const int> alphas);

/// sigma(S) with sigma(a_1..a_k) = (alpha_1 a_1, ..., alpha_k a_k).
/// Throws std::invalid_argument if some alpha_j is not a unit mod n_j.
ConnectionSet unit_map(const ConnectionSet& set, std::span<const int> alphas);

/// First coordinate 0, 1, 2, 3 of Z_4 goes to (0,0), (1,0), (1,1), (0,1).
std::vector<std::uint32_t> four_to_two_vertex_map(const DimVector& dim);

/// (4, 2, ..., 2) -> (2, 2, ..., 2) with one more coordinate.
ConnectionSet four_to_two(const ConnectionSet& set);

/// S_i = {s : (i, s) in S} for 0 <= i <= m/2, alpha = 1. Needs rank 2.
MetacirculantSpec to_metacirculant(const ConnectionSet& set);

/// One class of dimension vectors for a given order: a multiset of prime
/// powers, plus every dimension vector obtained by merging coprime entries.
struct DimClass {
  std::vector<int> prime_powers;                  // ascending
  std::vector<std::vector<int>> representatives;  // each ascending, sorted, first is prime_powers
};

std::vector<DimClass> enumerate_dimension_vectors(int n);

/// Lexicographically smallest sorted index list among all images of S under
/// unit multipliers and permutations of coordinates with equal moduli.
ConnectionSet canonical_form(const ConnectionSet& set);

/// Units of Z_m in ascending order.
std::vector<int> units_mod(int m);

}  // namespace mdcq
