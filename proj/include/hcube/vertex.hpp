#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcube {

inline constexpr int kMaxDimension = 64;
/// Operations that enumerate all 2^n vertices refuse larger n.
inline constexpr int kMaxEnumerableDimension = 24;

/// Fixed-width bit-vector of length n in [1, 64]. Coordinate x1 is the most
/// significant of the n low bits, so the integer value of the word reads the
/// same as the bitstring "x1 x2 ... xn".
template <class Tag>
class CubeBits {
 public:
  CubeBits(int n, std::uint64_t bits);

  int dimension() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int weight() const noexcept { return std::popcount(bits_); }

  /// Coordinate x_{i+1}, i in [0, n).
  bool coordinate(int i) const;

  friend bool operator==(const CubeBits&, const CubeBits&) = default;
  friend auto operator<=>(const CubeBits& a, const CubeBits& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_;
  std::uint64_t bits_;
};

struct VertexTag {};
struct MonomialTag {};

/// A point of {0,1}^n.
using Vertex = CubeBits<VertexTag>;
/// A square-free monomial, identified with the set of variables it contains.
using Monomial = CubeBits<MonomialTag>;

std::uint64_t dimension_mask(int n);

int hamming_weight(const Vertex& v);
inline int degree(const Monomial& m) { return m.weight(); }

/// 1 iff support(m) is contained in support(v).
int eval_monomial(const Monomial& m, const Vertex& v);

/// The vertex whose 1-coordinates are exactly the variables of m, and back.
Vertex vertex_of(const Monomial& m);
Monomial monomial_of(const Vertex& v);

/// Bitstring text form: exactly n '0'/'1' characters, leftmost = x1.
Vertex parse_vertex(std::string_view text);
std::string to_bitstring(const Vertex& v);
std::string to_bitstring(const Monomial& m);

/// "x1x3", or "1" for the constant monomial.
std::string to_term(const Monomial& m);

/// All n-bit words of the given weight in lexicographic order of their
/// bitstrings with '1' first (x1x2 before x1x3 before x2x3).
std::vector<std::uint64_t> masks_of_weight(int n, int weight);

void require_same_dimension(int a, int b, const char* what);

extern template class CubeBits<VertexTag>;
extern template class CubeBits<MonomialTag>;

}  // namespace hcube
