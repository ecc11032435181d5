#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lhg {

/// Malformed or out-of-contract input (bad expression, bad system file,
/// invalid coefficients, dimension mismatch).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in an expression, carrying the byte offset into the source.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& message, std::size_t offset)
      : ValidationError(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Overflow, singular systems, eigen-solver non-convergence.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace lhg
