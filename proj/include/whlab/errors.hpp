#pragma once

#include <stdexcept>
#include <string>

namespace whlab {

/// A precondition on the inputs of an operation was violated.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs were admissible but the computation could not be carried out
/// (overflow, degenerate geometry discovered during evaluation).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

} // namespace whlab
