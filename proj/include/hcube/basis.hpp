#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hcube/vertex.hpp"

namespace hcube {

/// All square-free monomials of degree <= k in n variables, ordered by
/// decreasing degree and lexicographically within a degree:
/// n=3, k=2 gives x1x2, x1x3, x2x3, x1, x2, x3, 1.
class MonomialBasis {
 public:
  int dimension() const noexcept { return n_; }
  int max_degree() const noexcept { return k_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  /// Index of m in the basis, or size() when absent.
  std::size_t index_of(const Monomial& m) const;

 private:
  friend MonomialBasis make_basis(int n, int k);
  int n_ = 0;
  int k_ = 0;
  std::vector<Monomial> monomials_;
};

/// Largest basis make_basis will build.
inline constexpr std::size_t kMaxBasisSize = std::size_t{1} << 24;

MonomialBasis make_basis(int n, int k);

/// 0/1 matrix with entry (i, j) = monomial i evaluated at vertex j.
class EvaluationMatrix {
 public:
  EvaluationMatrix(MonomialBasis rows, std::vector<Vertex> cols);

  const MonomialBasis& basis() const noexcept { return basis_; }
  const std::vector<Vertex>& vertices() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return basis_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }

  std::uint8_t at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_.size() + j];
  }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {entries_.data() + i * cols_.size(), cols_.size()};
  }

  friend bool operator==(const EvaluationMatrix& a, const EvaluationMatrix& b) {
    return a.basis_.monomials() == b.basis_.monomials() && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  MonomialBasis basis_;
  std::vector<Vertex> cols_;
  std::vector<std::uint8_t> entries_;
};

EvaluationMatrix evaluation_matrix(const MonomialBasis& basis,
                                   std::vector<Vertex> vertices);

/// Degree-<=k evaluation vector of one vertex, in basis order.
std::vector<std::uint8_t> evaluation_vector(const MonomialBasis& basis,
                                            const Vertex& v);

}  // namespace hcube
