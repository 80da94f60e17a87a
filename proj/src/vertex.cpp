#include "hcube/vertex.hpp"

#include <string>

#include "hcube/error.hpp"

namespace hcube {

std::uint64_t dimension_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

template <class Tag>
CubeBits<Tag>::CubeBits(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxDimension)
    throw ValidationError("dimension " + std::to_string(n) + " outside [1, 64]");
  if ((bits & ~dimension_mask(n)) != 0)
    throw ValidationError("bits set beyond dimension " + std::to_string(n));
}

template <class Tag>
bool CubeBits<Tag>::coordinate(int i) const {
  if (i < 0 || i >= n_) throw ValidationError("coordinate index out of range");
  return (bits_ >> (n_ - 1 - i)) & 1U;
}

template class CubeBits<VertexTag>;
template class CubeBits<MonomialTag>;

void require_same_dimension(int a, int b, const char* what) {
  if (a != b)
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
}

int hamming_weight(const Vertex& v) { return v.weight(); }

int eval_monomial(const Monomial& m, const Vertex& v) {
  require_same_dimension(m.dimension(), v.dimension(), "eval_monomial");
  return (v.bits() & m.bits()) == m.bits() ? 1 : 0;
}

Vertex vertex_of(const Monomial& m) { return Vertex(m.dimension(), m.bits()); }
Monomial monomial_of(const Vertex& v) { return Monomial(v.dimension(), v.bits()); }

Vertex parse_vertex(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxDimension))
    throw ValidationError("bitstring '" + std::string(text) + "' must have 1 to 64 characters");
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ValidationError("malformed bitstring '" + std::string(text) + "'");
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Vertex(static_cast<int>(text.size()), bits);
}

namespace {
std::string bitstring(int n, std::uint64_t bits) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((bits >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}
}  // namespace

std::string to_bitstring(const Vertex& v) { return bitstring(v.dimension(), v.bits()); }
std::string to_bitstring(const Monomial& m) { return bitstring(m.dimension(), m.bits()); }

std::string to_term(const Monomial& m) {
  if (m.bits() == 0) return "1";
  std::string s;
  for (int i = 0; i < m.dimension(); ++i)
    if (m.coordinate(i)) s += "x" + std::to_string(i + 1);
  return s;
}

std::vector<std::uint64_t> masks_of_weight(int n, int weight) {
  if (n < 0 || n > kMaxDimension) throw ValidationError("dimension outside [0, 64]");
  std::vector<std::uint64_t> out;
  if (weight < 0 || weight > n) return out;
  // Positions p[0] < ... < p[w-1] counted from x1; lexicographic order of
  // these index tuples is the required bitstring order.
  std::vector<int> p(static_cast<std::size_t>(weight));
  for (int i = 0; i < weight; ++i) p[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int q : p) mask |= std::uint64_t{1} << (n - 1 - q);
    out.push_back(mask);
    int i = weight - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == n - weight + i) --i;
    if (i < 0) break;
    ++p[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < weight; ++j)
      p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace hcube
