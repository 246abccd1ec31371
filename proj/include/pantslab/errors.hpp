#pragma once

#include <stdexcept>
#include <string>

namespace pantslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented invariant or precondition (bad triple,
/// malformed word, trivial class, coincident boundary points, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A radius-stabilized lift enumeration did not settle before its cap.
class UnstableEnumeration : public Error {
 public:
  using Error::Error;
};

}  // namespace pantslab
