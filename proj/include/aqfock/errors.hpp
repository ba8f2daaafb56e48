#pragma once

#include <stdexcept>
#include <string>

namespace aqfock {

// Argument errors use std::invalid_argument; the two classes below cover the
// remaining failure modes named by the library contracts.

/// A computation would exceed a configured size cap (group rank, order).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters leave the domain where a closed form is valid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace aqfock
