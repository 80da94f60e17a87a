#include "hcube/designs.hpp"

#include <algorithm>
#include <string>

#include "hcube/error.hpp"
#include "hcube/random.hpp"

namespace hcube {
namespace {

void check_degree(int n, int k) {
  if (n < 1 || n > kMaxDimension) throw ValidationError("dimension outside [1, 64]");
  if (k < 0 || k > n)
    throw ValidationError("degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

bool ball_order(const Vertex& a, const Vertex& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a.bits() > b.bits();
}

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ball_size(int n, int k) {
  check_degree(n, k);
  Integer total = 0;
  for (int i = 0; i <= k; ++i) total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
  return total;
}

Design hamming_ball(int n, int k) {
  check_degree(n, k);
  if (ball_size(n, k) > Integer(static_cast<unsigned long>(kMaxBasisSize)))
    throw ValidationError("Hamming ball for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                          " is too large to enumerate");
  std::vector<Vertex> vertices;
  for (int w = 0; w <= k; ++w)
    for (std::uint64_t mask : masks_of_weight(n, w)) vertices.emplace_back(n, mask);
  return Design(std::move(vertices));
}

EvaluationMatrix tightness_matrix(int n, int k) {
  check_degree(n, k);
  MonomialBasis basis = make_basis(n, k);
  std::vector<Vertex> cols;
  cols.reserve(basis.size());
  for (const Monomial& m : basis.monomials()) cols.push_back(vertex_of(m));
  return EvaluationMatrix(std::move(basis), std::move(cols));
}

namespace {

/// Floyd's algorithm: a uniform `count`-subset of [0, universe).
std::vector<std::uint64_t> floyd_sample(std::uint64_t universe, std::uint64_t count, Rng& rng) {
  std::vector<std::uint64_t> chosen;
  chosen.reserve(count);
  if (count <= 64) {
    for (std::uint64_t j = universe - count; j < universe; ++j) {
      const std::uint64_t t = rng.below(j + 1);
      const bool seen = std::find(chosen.begin(), chosen.end(), t) != chosen.end();
      chosen.push_back(seen ? j : t);
    }
    return chosen;
  }
  std::vector<bool> taken(universe, false);
  for (std::uint64_t j = universe - count; j < universe; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t pick = taken[t] ? j : t;
    taken[pick] = true;
    chosen.push_back(pick);
  }
  return chosen;
}

}  // namespace

Design sample_random_design(int n, std::uint64_t m, std::uint64_t seed) {
  if (n < 1 || n > kMaxEnumerableDimension)
    throw ValidationError("random designs support 1 <= n <= " + std::to_string(kMaxEnumerableDimension));
  const std::uint64_t universe = std::uint64_t{1} << n;
  if (m < 1 || m > universe)
    throw ValidationError("design size " + std::to_string(m) + " outside [1, " + std::to_string(universe) + "]");

  Rng rng(seed);
  std::vector<Vertex> vertices;
  vertices.reserve(m);
  if (m <= universe / 2) {
    for (std::uint64_t b : floyd_sample(universe, m, rng)) vertices.emplace_back(n, b);
  } else {
    std::vector<bool> excluded(universe, false);
    for (std::uint64_t b : floyd_sample(universe, universe - m, rng)) excluded[b] = true;
    for (std::uint64_t b = 0; b < universe; ++b)
      if (!excluded[b]) vertices.emplace_back(n, b);
  }
  std::sort(vertices.begin(), vertices.end(), ball_order);
  return Design(std::move(vertices));
}

std::vector<CountingRow> counting_table(int n_min, int n_max, int k) {
  if (n_min < 1 || n_max < n_min)
    throw ValidationError("invalid dimension range " + std::to_string(n_min) + ".." + std::to_string(n_max));
  if (n_max > 4096) throw ValidationError("dimension range capped at 4096");
  if (k < 0 || k > n_min)
    throw ValidationError("degree " + std::to_string(k) + " must lie in [0, " + std::to_string(n_min) + "]");
  std::vector<CountingRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Integer ball = 0;
    for (int i = 0; i <= k; ++i) ball += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
    rows.push_back({n, k, ball, binomial(static_cast<unsigned>(n + k), static_cast<unsigned>(k))});
  }
  return rows;
}

}  // namespace hcube
