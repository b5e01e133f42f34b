#pragma once

#include <stdexcept>
#include <string>

namespace gwh {

/// Input violates a documented precondition (malformed partition, bad graph, ...).
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds a configured size bound.
/// The CLI maps this to exit code 3.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// No object with the requested discrete data exists (e.g. negative branch degree).
class InfeasibleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A series could not be reconstructed as a rational function of the requested degrees.
class NotRationalError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace gwh
