#pragma once

#include <stdexcept>
#include <string>

namespace afgr {

/// Raised when an input violates a mathematical precondition
/// (non-dominant coweight, rank mismatch, non-vertex, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed command-line or textual input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace afgr
