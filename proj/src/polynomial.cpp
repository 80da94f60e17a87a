#include "hcube/polynomial.hpp"

#include <algorithm>

#include "hcube/error.hpp"

namespace hcube {

MultilinearPolynomial::MultilinearPolynomial(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) throw ValidationError("dimension outside [1, 64]");
}

void MultilinearPolynomial::add_term(const Monomial& m, const Rational& coefficient) {
  require_same_dimension(n_, m.dimension(), "add_term");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultilinearPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.weight());
  return d;
}

Rational eval_polynomial(const MultilinearPolynomial& p, const Vertex& v) {
  require_same_dimension(p.dimension(), v.dimension(), "eval_polynomial");
  Rational sum = 0;
  for (const auto& [m, c] : p.terms())
    if ((v.bits() & m.bits()) == m.bits()) sum += c;
  return sum;
}

namespace {
std::uint64_t support_of(const RawTerm& t, int n) {
  if (t.exponents.size() != static_cast<std::size_t>(n))
    throw ValidationError("exponent vector length does not match dimension");
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    if (t.exponents[static_cast<std::size_t>(i)] > 0) bits |= std::uint64_t{1} << (n - 1 - i);
  return bits;
}
}  // namespace

Rational eval_raw(const std::vector<RawTerm>& terms, const Vertex& v) {
  Rational sum = 0;
  for (const RawTerm& t : terms) {
    Rational product = t.coefficient;
    for (int i = 0; i < v.dimension(); ++i) {
      const unsigned e = t.exponents.at(static_cast<std::size_t>(i));
      const int x = v.coordinate(i) ? 1 : 0;
      for (unsigned r = 0; r < e; ++r) product *= x;
    }
    sum += product;
  }
  return sum;
}

MultilinearPolynomial reduce_multilinear(const std::vector<RawTerm>& terms, int n) {
  MultilinearPolynomial p(n);
  for (const RawTerm& t : terms) p.add_term(Monomial(n, support_of(t, n)), t.coefficient);
  return p;
}

}  // namespace hcube
