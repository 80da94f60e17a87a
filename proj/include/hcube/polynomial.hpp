#pragma once

#include <map>
#include <vector>

#include "hcube/rational.hpp"
#include "hcube/vertex.hpp"

namespace hcube {

/// Exact polynomial in square-free monomials. Zero coefficients are never
/// stored.
class MultilinearPolynomial {
 public:
  explicit MultilinearPolynomial(int n);

  int dimension() const noexcept { return n_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds `coefficient * m`, merging with an existing term.
  void add_term(const Monomial& m, const Rational& coefficient);

  /// Highest monomial degree, -1 for the zero polynomial.
  int degree() const;

  friend bool operator==(const MultilinearPolynomial&,
                         const MultilinearPolynomial&) = default;

 private:
  int n_;
  std::map<Monomial, Rational> terms_;
};

Rational eval_polynomial(const MultilinearPolynomial& p, const Vertex& v);

/// A monomial with arbitrary nonnegative exponents, one per variable.
struct RawTerm {
  Rational coefficient;
  std::vector<unsigned> exponents;
};

/// Evaluates an arbitrary-exponent polynomial directly at a vertex.
Rational eval_raw(const std::vector<RawTerm>& terms, const Vertex& v);

/// Clamps every exponent to at most 1 (x^2 = x on {0,1}) and merges like
/// terms. The result agrees with the input on every vertex.
MultilinearPolynomial reduce_multilinear(const std::vector<RawTerm>& terms,
                                         int n);

}  // namespace hcube
