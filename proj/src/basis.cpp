#include "hcube/basis.hpp"

#include <algorithm>
#include <string>

#include "hcube/error.hpp"
#include "hcube/simd.hpp"

namespace hcube {

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  if (m.dimension() != n_ || m.weight() > k_) return size();
  // Blocks of decreasing degree, each sorted by decreasing bits.
  const auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m,
                                   [](const Monomial& a, const Monomial& b) {
                                     if (a.weight() != b.weight()) return a.weight() > b.weight();
                                     return a.bits() > b.bits();
                                   });
  return (it != monomials_.end() && *it == m) ? static_cast<std::size_t>(it - monomials_.begin())
                                              : size();
}

MonomialBasis make_basis(int n, int k) {
  if (n < 1 || n > kMaxDimension) throw ValidationError("dimension outside [1, 64]");
  if (k < 0 || k > n)
    throw ValidationError("degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  // Size check before enumerating: sum of C(n, i) for i <= k.
  long double total = 0;
  long double c = 1;
  for (int i = 0; i <= k; ++i) {
    total += c;
    c = c * (n - i) / (i + 1);
  }
  if (total > static_cast<long double>(kMaxBasisSize))
    throw ValidationError("monomial basis for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                          " is too large to enumerate");

  MonomialBasis basis;
  basis.n_ = n;
  basis.k_ = k;
  for (int d = k; d >= 0; --d)
    for (std::uint64_t mask : masks_of_weight(n, d)) basis.monomials_.emplace_back(n, mask);
  return basis;
}

EvaluationMatrix::EvaluationMatrix(MonomialBasis rows, std::vector<Vertex> cols)
    : basis_(std::move(rows)), cols_(std::move(cols)) {
  if (cols_.empty()) throw ValidationError("evaluation matrix needs at least one vertex");
  std::vector<std::uint64_t> words;
  words.reserve(cols_.size());
  for (const Vertex& v : cols_) {
    require_same_dimension(basis_.dimension(), v.dimension(), "evaluation_matrix");
    words.push_back(v.bits());
  }
  entries_.resize(basis_.size() * cols_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    simd::subset_row(basis_[i].bits(), words,
                     std::span<std::uint8_t>(entries_.data() + i * cols_.size(), cols_.size()));
}

EvaluationMatrix evaluation_matrix(const MonomialBasis& basis, std::vector<Vertex> vertices) {
  return EvaluationMatrix(basis, std::move(vertices));
}

std::vector<std::uint8_t> evaluation_vector(const MonomialBasis& basis, const Vertex& v) {
  require_same_dimension(basis.dimension(), v.dimension(), "evaluation_vector");
  std::vector<std::uint8_t> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    out[i] = static_cast<std::uint8_t>((v.bits() & basis[i].bits()) == basis[i].bits());
  return out;
}

}  // namespace hcube
