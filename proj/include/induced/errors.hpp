#pragma once

#include <stdexcept>
#include <string>

namespace induced {

/// A requested computation would exceed the configured memory or work budget.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs lie outside the range an operation is defined on.
class PreconditionViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Graph enumeration requested for a vertex count outside the supported range.
class ScaleRejected : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace induced
