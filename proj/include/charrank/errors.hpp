#pragma once

#include <stdexcept>
#include <string>

namespace charrank {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An explicit enumeration was asked for a weight above its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Grassmannian parameters with k > n.
class InvalidDimensions : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Degree above the characteristic-rank bound t, where no estimate holds.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotGapless : public Error {
 public:
  using Error::Error;
};

}  // namespace charrank
