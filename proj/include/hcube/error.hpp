#pragma once

#include <stdexcept>
#include <string>

namespace hcube {

/// Bad input: dimension mismatch, out-of-range parameter, malformed text.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested vertex value is not determined by the design at the given order.
class NotDeterminableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcube
