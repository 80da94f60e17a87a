#pragma once

#include <cstdint>
#include <vector>

#include "hcube/basis.hpp"
#include "hcube/design.hpp"
#include "hcube/rational.hpp"

namespace hcube {

/// All vertices of weight <= k, by increasing weight then lexicographically
/// ("100" before "010").
Design hamming_ball(int n, int k);

/// Square evaluation matrix whose column j is the vertex with the same
/// support as basis monomial j. Lower triangular with unit diagonal.
EvaluationMatrix tightness_matrix(int n, int k);

/// m distinct vertices, uniform over all C(2^n, m) subsets, a deterministic
/// function of the seed. Uses Floyd's index sampling (on the complement
/// when m > 2^(n-1)); the result is sorted in Hamming-ball order.
Design sample_random_design(int n, std::uint64_t m, std::uint64_t seed);

Integer binomial(unsigned n, unsigned k);
/// sum_{i<=k} C(n, i).
Integer ball_size(int n, int k);

struct CountingRow {
  int n;
  int k;
  Integer ball_size;     // points needed on the cube
  Integer generic_size;  // points needed in general position, C(n+k, k)
};

std::vector<CountingRow> counting_table(int n_min, int n_max, int k);

}  // namespace hcube
