#include "hcube/design.hpp"

#include <algorithm>
#include <string>

#include "hcube/error.hpp"

namespace hcube {

Design::Design(std::vector<Vertex> vertices) : n_(0), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("design must contain at least one vertex");
  n_ = vertices_.front().dimension();
  for (const Vertex& v : vertices_) require_same_dimension(n_, v.dimension(), "design");
  std::vector<std::uint64_t> sorted;
  sorted.reserve(vertices_.size());
  for (const Vertex& v : vertices_) sorted.push_back(v.bits());
  std::sort(sorted.begin(), sorted.end());
  if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw ValidationError("duplicate vertex " + to_bitstring(Vertex(n_, *dup)) + " in design");
}

Design::Design(std::vector<Vertex> vertices, std::vector<Rational> values)
    : Design(std::move(vertices)) {
  if (values.size() != vertices_.size())
    throw ValidationError("design has " + std::to_string(vertices_.size()) + " vertices but " +
                          std::to_string(values.size()) + " values");
  for (Rational& v : values) v.canonicalize();
  values_ = std::move(values);
}

const std::vector<Rational>& Design::values() const {
  if (!values_) throw ValidationError("design carries no measured values");
  return *values_;
}

std::size_t Design::index_of(const Vertex& v) const {
  return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), v) -
                                  vertices_.begin());
}

bool Design::contains(const Vertex& v) const { return index_of(v) != size(); }

Design Design::with_values(std::vector<Rational> values) const {
  return Design(vertices_, std::move(values));
}

}  // namespace hcube
