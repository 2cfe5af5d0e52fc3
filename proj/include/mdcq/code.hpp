#pragma once

#include <span>
#include <string>
#include <vector>

#include "mdcq/bits.hpp"
#include "mdcq/graph.hpp"

namespace mdcq {

/// GF(4) element x*w + z, so (0,0)=0, (0,1)=1, (1,0)=w, (1,1)=w^2.
/// With this encoding the trace inner product is x z' + x' z.
struct F4Element {
  bool x = false;
  bool z = false;

  static constexpr F4Element zero() { return {false, false}; }
  static constexpr F4Element one() { return {false, true}; }
  static constexpr F4Element omega() { return {true, false}; }
  static constexpr F4Element omega2() { return {true, true}; }

  /// Symbol used in generator exports: 0, 1, w, W (W = w^2).
  char symbol() const;
  static F4Element from_symbol(char c);

  friend constexpr F4Element operator+(F4Element a, F4Element b) { return {a.x != b.x, a.z != b.z}; }
  friend F4Element operator*(F4Element a, F4Element b);
  friend constexpr bool operator==(F4Element, F4Element) = default;
};

/// Codeword in binary symplectic form; position i is (xbits[i], zbits[i]).
struct SymplecticVector {
  BitVector x;
  BitVector z;

  std::size_t length() const { return x.size(); }
  std::vector<F4Element> to_f4() const;
  static SymplecticVector from_f4(std::span<const F4Element> v);

  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;
};

/// sum_i u_i v_i^2 + u_i^2 v_i over GF(4); the result is always 0 or 1.
int trace_inner_product(std::span<const F4Element> u, std::span<const F4Element> v);

/// Same form in symplectic coordinates: sum_i x_i z'_i + x'_i z_i mod 2.
int symplectic_product(const SymplecticVector& u, const SymplecticVector& v);

/// Additive code spanned by the rows of A + wI, held as generators (I | A).
class GraphCode {
 public:
  /// Throws std::invalid_argument unless `z_block` is symmetric with zero diagonal.
  explicit GraphCode(BitMatrix z_block);

  /// Skips validation; lets tests build deliberately broken codes.
  static GraphCode unchecked(BitMatrix z_block);

  int length() const { return static_cast<int>(z_.order()); }
  const BitMatrix& z_block() const { return z_; }
  SymplecticVector generator(int i) const;

  /// x = c, z = c A over GF(2).
  SymplecticVector codeword(const BitVector& combination) const;

 private:
  struct NoCheck {};
  GraphCode(BitMatrix z_block, NoCheck) : z_(std::move(z_block)) {}

  BitMatrix z_;
};

GraphCode code_from_graph(const AdjacencyMatrix& adjacency);

/// Every generator pair trace-orthogonal and the generators independent.
bool is_self_dual(const GraphCode& code);

enum class CodeType { I, II };

const char* to_string(CodeType t);

/// Type II iff |S| is odd.
CodeType code_type(const MdcGraph& graph);

/// Type from enumerating all 2^n codewords; throws for n > 24.
CodeType code_type_by_enumeration(const GraphCode& code);

/// One line per generator over {0, 1, w, W}.
std::string generator_text(const GraphCode& code);

/// One line per generator: x bits, '|', z bits.
std::string symplectic_matrix_text(const GraphCode& code);

}  // namespace mdcq
