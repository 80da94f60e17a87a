#include "hcube/linalg.hpp"

#include <algorithm>

#include "hcube/basis.hpp"
#include "hcube/detail/elimination.hpp"
#include "hcube/error.hpp"
#include "hcube/simd.hpp"

namespace hcube {

using detail::Dense;

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

GF2Matrix::GF2Matrix(std::initializer_list<std::initializer_list<int>> rows)
    : GF2Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    std::size_t j = 0;
    for (int bit : r) set(i, j++, (bit & 1) != 0);
    ++i;
  }
}

void GF2Matrix::set(std::size_t i, std::size_t j, bool bit) {
  std::uint64_t& w = words_[i * stride_ + j / 64];
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  w = bit ? (w | mask) : (w & ~mask);
}

namespace {

/// Integer matrix with the same row space structure: each row scaled by the
/// lcm of its denominators. Row scaling preserves rank and solutions.
Dense<Integer> integer_rows(const RationalMatrix& m) {
  Dense<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

std::optional<Dense<std::int64_t>> narrow(const Dense<Integer>& m) {
  Dense<std::int64_t> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    if (!m.a[i].fits_slong_p()) return std::nullopt;
    out.a[i] = m.a[i].get_si();
  }
  return out;
}

Dense<std::int64_t> to_dense(const EvaluationMatrix& m) {
  Dense<std::int64_t> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j);
  return out;
}

}  // namespace

std::size_t rank_rational(const RationalMatrix& m) {
  Dense<Integer> wide = integer_rows(m);
  if (auto small = narrow(wide)) return detail::rank_checked(std::move(*small));
  return detail::bareiss_rank(wide);
}

std::size_t rank_rational(const EvaluationMatrix& m) { return detail::rank_checked(to_dense(m)); }

std::size_t rank_gf2(const GF2Matrix& input) {
  GF2Matrix m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (m.get(i, c)) simd::xor_words(m.row(i), m.row(r));
    ++r;
  }
  return r;
}

GF2Matrix to_gf2(const EvaluationMatrix& m) {
  GF2Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) out.set(i, j, true);
  return out;
}

namespace {

template <class T>
std::optional<std::vector<Rational>> read_solution(const Dense<T>& m, std::size_t ncols,
                                                   const std::vector<std::size_t>& pivots,
                                                   const T& scale) {
  for (std::size_t i = pivots.size(); i < m.rows; ++i)
    if (!detail::is_zero(m(i, ncols))) return std::nullopt;
  std::vector<Rational> a(ncols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rational coeff{Integer(m(i, ncols)), Integer(scale)};
    coeff.canonicalize();
    a[pivots[i]] = coeff;
  }
  return a;
}

}  // namespace

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   const std::vector<Rational>& target) {
  const std::size_t len = target.size();
  for (const auto& c : columns)
    if (c.size() != len) throw ValidationError("solve_in_span: vector length mismatch");

  const std::size_t ncols = columns.size();
  RationalMatrix aug(len, ncols + 1);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) aug(i, j) = columns[j][i];
    aug(i, ncols) = target[i];
  }
  Dense<Integer> wide = integer_rows(aug);
  std::vector<std::size_t> pivots;
  if (auto small = narrow(wide)) {
    try {
      std::int64_t scale = 1;
      detail::gauss_jordan(*small, ncols, pivots, scale);
      return read_solution<std::int64_t>(*small, ncols, pivots, scale);
    } catch (const detail::Overflow&) {
    }
  }
  Integer scale = 1;
  detail::gauss_jordan(wide, ncols, pivots, scale);
  return read_solution<Integer>(wide, ncols, pivots, scale);
}

bool affinely_independent(std::span<const Vertex> vertices, Field field) {
  if (vertices.empty()) throw ValidationError("affinely_independent: empty vertex list");
  const int n = vertices.front().dimension();
  for (const Vertex& v : vertices) require_same_dimension(n, v.dimension(), "affinely_independent");
  const std::size_t cols = static_cast<std::size_t>(n) + 1;
  if (vertices.size() > cols) return false;

  if (field == Field::gf2) {
    GF2Matrix m(vertices.size(), cols);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      m.set(i, 0, true);
      for (int c = 0; c < n; ++c)
        if (vertices[i].coordinate(c)) m.set(i, static_cast<std::size_t>(c) + 1, true);
    }
    return rank_gf2(m) == vertices.size();
  }

  Dense<std::int64_t> m(vertices.size(), cols);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    m(i, 0) = 1;
    const std::uint64_t bits = vertices[i].bits();
    for (int c = 0; c < n; ++c) m(i, static_cast<std::size_t>(c) + 1) = (bits >> (n - 1 - c)) & 1U;
  }
  return detail::rank_checked(std::move(m)) == vertices.size();
}

}  // namespace hcube
