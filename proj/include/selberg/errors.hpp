#pragma once

#include <stdexcept>
#include <string>

namespace selberg {

// Precondition violations and malformed input. The CLI maps these to exit 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by real-root isolation when gcd(f, f') is non-constant.
class NotSquarefreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured cap (scan limit, search-space guard, overflow bound) was hit.
// The CLI maps these to exit 3.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace selberg
