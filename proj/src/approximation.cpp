#include "hcube/approximation.hpp"

#include <map>
#include <string>

#include "hcube/designs.hpp"
#include "hcube/error.hpp"
#include "hcube/linalg.hpp"

namespace hcube {

using detail::Dense;

namespace {

template <class T>
void fill_augmented(Dense<T>& m, const MonomialBasis& basis, std::span<const Vertex> design) {
  const std::size_t cols = design.size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::uint64_t mono = basis[i].bits();
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = T((design[j].bits() & mono) == mono ? 1 : 0);
    m(i, cols + i) = T(1);
  }
}

void check_order(int n, int k) {
  if (k < 0 || k > n)
    throw ValidationError("order " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

}  // namespace

DesignSolver::DesignSolver(std::span<const Vertex> design, int k)
    : basis_(make_basis(design.empty() ? 1 : design.front().dimension(), k)),
      design_(design.begin(), design.end()) {
  if (design_.empty()) throw ValidationError("design must contain at least one vertex");
  for (const Vertex& v : design_) require_same_dimension(dimension(), v.dimension(), "design");

  const std::size_t rows = basis_.size();
  const std::size_t cols = design_.size();
  Dense<std::int64_t> narrow(rows, cols + rows);
  fill_augmented(narrow, basis_, design_);
  transform_ = Dense<Integer>(rows, rows);
  try {
    std::int64_t scale = 1;
    detail::gauss_jordan(narrow, cols, pivots_, scale);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j) transform_(i, j) = Integer(narrow(i, cols + j));
    scale_ = Integer(scale);
  } catch (const detail::Overflow&) {
    Dense<Integer> wide(rows, cols + rows);
    fill_augmented(wide, basis_, design_);
    detail::gauss_jordan(wide, cols, pivots_, scale_);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j) transform_(i, j) = wide(i, cols + j);
  }
}

std::optional<std::vector<Integer>> DesignSolver::reduce_target(const Vertex& t) const {
  require_same_dimension(dimension(), t.dimension(), "target");
  std::vector<std::size_t> active;
  for (std::size_t l = 0; l < basis_.size(); ++l)
    if ((t.bits() & basis_[l].bits()) == basis_[l].bits()) active.push_back(l);

  std::vector<Integer> u(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Integer sum = 0;
    for (std::size_t l : active) sum += transform_(i, l);
    if (i >= rank() && sum != 0) return std::nullopt;
    u[i] = std::move(sum);
  }
  return u;
}

bool DesignSolver::determinable(const Vertex& t) const { return reduce_target(t).has_value(); }

std::optional<std::vector<Rational>> DesignSolver::coefficients(const Vertex& t) const {
  std::vector<Rational> a(design_.size(), Rational(0));
  // A measured vertex is reproduced by its own unit coefficient.
  for (std::size_t j = 0; j < design_.size(); ++j) {
    if (design_[j] == t) {
      a[j] = 1;
      return a;
    }
  }
  const auto u = reduce_target(t);
  if (!u) return std::nullopt;
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational c((*u)[i], scale_);
    c.canonicalize();
    a[pivots_[i]] = c;
  }
  return a;
}

Rational DesignSolver::approximate(std::span<const Rational> values, const Vertex& t) const {
  if (values.size() != design_.size())
    throw ValidationError("expected " + std::to_string(design_.size()) + " values, got " +
                          std::to_string(values.size()));
  for (std::size_t j = 0; j < design_.size(); ++j)
    if (design_[j] == t) return values[j];
  const auto u = reduce_target(t);
  if (!u)
    throw NotDeterminableError(to_bitstring(t) + " is not determinable at order " +
                               std::to_string(order()));
  Rational sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) sum += Rational((*u)[i]) * values[pivots_[i]];
  sum /= Rational(scale_);
  return sum;
}

bool determinable(const Design& s, const Vertex& t, int k) {
  require_same_dimension(s.dimension(), t.dimension(), "determinable");
  check_order(s.dimension(), k);
  return DesignSolver(s.vertices(), k).determinable(t);
}

namespace {

/// Row echelon form over the integers that accepts one row at a time. Rows
/// are kept primitive (content 1) to bound growth.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t width) : width_(width) {}

  /// Reduces `row` against the stored rows and keeps it if anything is left.
  /// Returns the pivot column of the new row, or width when it reduced to 0.
  std::size_t insert(std::vector<Integer> row) {
    for (auto& [col, pivot_row] : rows_) {
      if (row[col] == 0) continue;
      const Integer a = pivot_row[col];
      const Integer b = row[col];
      for (std::size_t j = 0; j < width_; ++j) row[j] = a * row[j] - b * pivot_row[j];
    }
    std::size_t lead = 0;
    while (lead < width_ && row[lead] == 0) ++lead;
    if (lead == width_) return width_;
    Integer g = 0;
    for (std::size_t j = lead; j < width_; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g != 1)
      for (std::size_t j = lead; j < width_; ++j) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    rows_.emplace(lead, std::move(row));
    return lead;
  }

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<Integer>> rows_;
};

}  // namespace

ApproximationDegree degree_of_approximation(const Design& s, const Vertex& t) {
  const int n = s.dimension();
  require_same_dimension(n, t.dimension(), "degree_of_approximation");
  const std::size_t cols = s.size();
  // Target column last: a pivot there means the target's evaluation vector
  // is outside the span of the design's at the current order.
  IncrementalEchelon echelon(cols + 1);
  for (int k = 0; k <= n; ++k) {
    bool failed = false;
    for (std::uint64_t mono : masks_of_weight(n, k)) {
      std::vector<Integer> row(cols + 1);
      for (std::size_t j = 0; j < cols; ++j)
        row[j] = (s.vertices()[j].bits() & mono) == mono ? 1 : 0;
      row[cols] = (t.bits() & mono) == mono ? 1 : 0;
      if (echelon.insert(std::move(row)) == cols) failed = true;
    }
    if (failed) return {k - 1};
  }
  return {n};
}

Rational approximate_value(const Design& s, const Vertex& t, int k) {
  require_same_dimension(s.dimension(), t.dimension(), "approximate_value");
  check_order(s.dimension(), k);
  const auto& values = s.values();
  if (const std::size_t j = s.index_of(t); j != s.size()) return values[j];
  return DesignSolver(s.vertices(), k).approximate(values, t);
}

bool covers_all(const Design& s, int k) {
  check_order(s.dimension(), k);
  const MonomialBasis basis = make_basis(s.dimension(), k);
  return rank_rational(evaluation_matrix(basis, s.vertices())) == basis.size();
}

Rational lemma_reconstruct(const std::map<Vertex, Rational>& subcube_values, const Vertex& w) {
  if (subcube_values.empty()) throw ValidationError("lemma_reconstruct: no subcube values given");
  std::uint64_t free_coords = 0;
  for (const auto& [v, value] : subcube_values) {
    require_same_dimension(w.dimension(), v.dimension(), "lemma_reconstruct");
    if (v == w) throw ValidationError("lemma_reconstruct: the target vertex already has a value");
    free_coords |= v.bits() ^ w.bits();
  }
  const int d = std::popcount(free_coords);
  if (d >= 63 || subcube_values.size() != (std::uint64_t{1} << d) - 1)
    throw ValidationError("lemma_reconstruct: expected the " + std::to_string((std::uint64_t{1} << d) - 1) +
                          " other vertices of a " + std::to_string(d) +
                          "-dimensional subcube, got " + std::to_string(subcube_values.size()));
  // Even and odd vertices (relative to any base) balance; parity relative
  // to w is the distance to w.
  Rational value = 0;
  for (const auto& [v, fv] : subcube_values) {
    if (std::popcount(v.bits() ^ w.bits()) % 2 == 1)
      value += fv;
    else
      value -= fv;
  }
  return value;
}

std::vector<Rational> complete_from_ball(const Design& ball, int k) {
  const int n = ball.dimension();
  check_order(n, k);
  if (n > kMaxEnumerableDimension)
    throw ValidationError("complete_from_ball supports n <= " + std::to_string(kMaxEnumerableDimension));
  const auto& measured = ball.values();

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Rational> f(total);
  std::vector<bool> known(total, false);
  std::string extra;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Vertex& v = ball.vertices()[i];
    if (v.weight() > k) {
      extra += (extra.empty() ? "" : " ") + to_bitstring(v);
      continue;
    }
    f[v.bits()] = measured[i];
    known[v.bits()] = true;
  }
  std::string missing;
  std::size_t missing_count = 0;
  for (int w = 0; w <= k; ++w)
    for (std::uint64_t mask : masks_of_weight(n, w))
      if (!known[mask]) {
        if (++missing_count <= 20) missing += (missing.empty() ? "" : " ") + to_bitstring(Vertex(n, mask));
      }
  if (!extra.empty() || missing_count > 0) {
    std::string msg = "measurements are not exactly the Hamming ball of radius " + std::to_string(k);
    if (missing_count > 0) msg += "; missing: " + missing + (missing_count > 20 ? " ..." : "");
    if (!extra.empty()) msg += "; extra: " + extra;
    throw ValidationError(msg);
  }

  // The subcube spanned by support(v) over the origin: every proper subset
  // of v has weight < weight(v) and is already known.
  for (int w = k + 1; w <= n; ++w) {
    for (std::uint64_t v : masks_of_weight(n, w)) {
      Rational value = 0;
      for (std::uint64_t s = (v - 1) & v;; s = (s - 1) & v) {
        if ((w - std::popcount(s)) % 2 == 1)
          value += f[s];
        else
          value -= f[s];
        if (s == 0) break;
      }
      f[v] = std::move(value);
    }
  }
  return f;
}

}  // namespace hcube
