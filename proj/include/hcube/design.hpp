#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hcube/rational.hpp"
#include "hcube/vertex.hpp"

namespace hcube {

/// A nonempty set of distinct vertices of one dimension, optionally carrying
/// one measured value per vertex.
class Design {
 public:
  explicit Design(std::vector<Vertex> vertices);
  Design(std::vector<Vertex> vertices, std::vector<Rational> values);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  bool has_values() const noexcept { return values_.has_value(); }
  /// Throws ValidationError when the design carries no values.
  const std::vector<Rational>& values() const;

  bool contains(const Vertex& v) const;
  /// Position of v in vertices(), or size() when absent.
  std::size_t index_of(const Vertex& v) const;

  /// Copy of this design with the given measurements attached.
  Design with_values(std::vector<Rational> values) const;

 private:
  int n_;
  std::vector<Vertex> vertices_;
  std::optional<std::vector<Rational>> values_;
};

}  // namespace hcube
