#pragma once

#include <stdexcept>
#include <string>

namespace gablab {

/// Raised when an operation's domain preconditions are violated
/// (reducible modulus, dependent points, degree out of range, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gablab
