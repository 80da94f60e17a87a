#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hcube/rational.hpp"
#include "hcube/vertex.hpp"

namespace hcube {

class EvaluationMatrix;

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> a_;
};

/// Bit matrix over GF(2), each row packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix(std::size_t rows, std::size_t cols);
  GF2Matrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * stride_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool bit);

  std::span<std::uint64_t> row(std::size_t i) {
    return {words_.data() + i * stride_, stride_};
  }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {words_.data() + i * stride_, stride_};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

/// Exact rank by fraction-free elimination. Pivots are taken column by
/// column, left to right, using the first nonzero entry from the top among
/// the rows not yet used.
std::size_t rank_rational(const RationalMatrix& m);
std::size_t rank_rational(const EvaluationMatrix& m);

std::size_t rank_gf2(const GF2Matrix& m);
GF2Matrix to_gf2(const EvaluationMatrix& m);

/// Finds coefficients a with sum_i a[i] * columns[i] == target, or nothing
/// when the target is outside the span. Pivot columns are the earliest
/// possible ones and free coefficients are zero, so the answer is a
/// deterministic function of the input.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<Rational>& target);

enum class Field { rational, gf2 };

/// True iff the vectors (1, v) for v in `vertices` are linearly independent
/// over the chosen field.
bool affinely_independent(std::span<const Vertex> vertices, Field field);

}  // namespace hcube
