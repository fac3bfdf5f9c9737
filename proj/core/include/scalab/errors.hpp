#pragma once

#include <stdexcept>
#include <string>

namespace scalab {

/// Thrown when caller-supplied parameters fall outside a model's domain.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a well-formed request cannot be evaluated (e.g. a nonpositive
/// denominator produced by user-supplied workload functions).
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scalab
