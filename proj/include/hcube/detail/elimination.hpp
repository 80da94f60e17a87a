#pragma once

// Fraction-free elimination over the integers. The int64 instantiation
// throws Overflow as soon as an intermediate value leaves 64 bits; callers
// retry with the GMP instantiation.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace hcube::detail {

struct Overflow {};

__extension__ using int128 = __int128;

/// (a*b - c*d) / divisor, where the division is known to be exact.
inline std::int64_t cross_div(std::int64_t a, std::int64_t b, std::int64_t c,
                              std::int64_t d, std::int64_t divisor) {
  std::int64_t ab = 0;
  std::int64_t cd = 0;
  std::int64_t diff = 0;
  if (!__builtin_mul_overflow(a, b, &ab) && !__builtin_mul_overflow(c, d, &cd) &&
      !__builtin_sub_overflow(ab, cd, &diff)) {
    if (divisor == 1) return diff;
    if (divisor == -1) {
      if (diff == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
      return -diff;
    }
    return diff / divisor;
  }
  const int128 wide = (static_cast<int128>(a) * b - static_cast<int128>(c) * d) / divisor;
  if (wide > std::numeric_limits<std::int64_t>::max() ||
      wide < std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return static_cast<std::int64_t>(wide);
}

inline mpz_class cross_div(const mpz_class& a, const mpz_class& b,
                           const mpz_class& c, const mpz_class& d,
                           const mpz_class& divisor) {
  mpz_class r = a * b - c * d;
  if (divisor != 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), divisor.get_mpz_t());
  return r;
}

inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a[i * cols + c], a[j * cols + c]);
  }
};

inline Dense<mpz_class> widen(const Dense<std::int64_t>& m) {
  Dense<mpz_class> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i)
    out.a[i] = mpz_class(static_cast<long>(m.a[i]));
  return out;
}

/// Row-echelon rank, in place. Only columns < pivot_cols are pivot
/// candidates.
template <class T>
std::size_t bareiss_rank(Dense<T>& m, std::size_t pivot_cols) {
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const T pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const T lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j)
        m(i, j) = cross_div(pivot, m(i, j), lead, m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

template <class T>
std::size_t bareiss_rank(Dense<T>& m) {
  return bareiss_rank(m, m.cols);
}

/// Rank of a small int64 matrix, falling back to GMP on overflow.
inline std::size_t rank_checked(Dense<std::int64_t> m) {
  const Dense<std::int64_t> copy = m;
  try {
    return bareiss_rank(m);
  } catch (const Overflow&) {
    Dense<mpz_class> wide = widen(copy);
    return bareiss_rank(wide);
  }
}

/// Fraction-free Gauss-Jordan reduction, in place. On return every pivot row
/// i < pivots.size() has the value `scale` at column pivots[i] and zeros in
/// all other pivot columns; rows from pivots.size() on are zero in every
/// column < pivot_cols. Columns >= pivot_cols are carried along unpivoted.
template <class T>
void gauss_jordan(Dense<T>& m, std::size_t pivot_cols, std::vector<std::size_t>& pivots,
                  T& scale) {
  pivots.clear();
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const T pivot = m(r, c);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const T lead = m(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j == c) continue;
        m(i, j) = cross_div(pivot, m(i, j), lead, m(r, j), prev);
      }
      m(i, c) = T(0);
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  scale = prev;
}

}  // namespace hcube::detail
