#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hcube/basis.hpp"
#include "hcube/design.hpp"
#include "hcube/detail/elimination.hpp"
#include "hcube/rational.hpp"
#include "hcube/vertex.hpp"

namespace hcube {

/// deg(S -> t): the largest k such that every polynomial of degree <= k
/// vanishing on S also vanishes at t. Equal to n exactly when t is in S.
struct ApproximationDegree {
  int value;
  friend auto operator<=>(const ApproximationDegree&, const ApproximationDegree&) = default;
};

/// Reduced form of a design's degree-<=k evaluation matrix, reusable across
/// target vertices. Construction is one fraction-free Gauss-Jordan pass over
/// [A | I]; each query then costs one sparse product with the recorded
/// transform.
class DesignSolver {
 public:
  DesignSolver(std::span<const Vertex> design, int k);

  int dimension() const noexcept { return basis_.dimension(); }
  int order() const noexcept { return basis_.max_degree(); }
  const MonomialBasis& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// The design determines every vertex at this order.
  bool covers_all() const noexcept { return rank() == basis_.size(); }

  bool determinable(const Vertex& t) const;

  /// Coefficients a with f(t) = sum_i a[i] f(design[i]) for every
  /// polynomial f of degree <= k, or nothing when t is not determined.
  std::optional<std::vector<Rational>> coefficients(const Vertex& t) const;

  /// Throws NotDeterminableError when t is not determined at this order.
  Rational approximate(std::span<const Rational> values, const Vertex& t) const;

 private:
  // Transformed target column, or nothing when the target is outside the
  // span.
  std::optional<std::vector<Integer>> reduce_target(const Vertex& t) const;

  MonomialBasis basis_;
  std::vector<Vertex> design_;
  std::vector<std::size_t> pivots_;
  detail::Dense<Integer> transform_;
  Integer scale_;
};

bool determinable(const Design& s, const Vertex& t, int k);

/// Searches k = 0, 1, ... with one incrementally grown echelon form and
/// stops at the first order that fails.
ApproximationDegree degree_of_approximation(const Design& s, const Vertex& t);

/// Prediction of f(t) from the design's measurements, exact when they come
/// from a polynomial of degree <= k. Throws NotDeterminableError otherwise.
Rational approximate_value(const Design& s, const Vertex& t, int k);

bool covers_all(const Design& s, int k);

/// Value at w forced by the alternating-sum identity over the subcube formed
/// by w and the keys of `subcube_values` (which must be that subcube minus
/// w). Exact when the function has degree below the subcube dimension.
Rational lemma_reconstruct(const std::map<Vertex, Rational>& subcube_values,
                           const Vertex& w);

/// Fills in all 2^n values from measurements on exactly the Hamming ball of
/// radius k, visiting vertices by increasing weight and applying the
/// alternating-sum identity on the subcube below each one. The result is
/// indexed by Vertex::bits(). Costs O(3^n) rational additions.
std::vector<Rational> complete_from_ball(const Design& ball, int k);

}  // namespace hcube
