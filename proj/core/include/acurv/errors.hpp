#pragma once

#include <stdexcept>
#include <string>

namespace acurv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands whose degree, order or dimension do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A size limit (group degree, partition weight, ...) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Input violates a mathematical precondition (non-symmetric matrix,
// non-curvature tensor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested object cannot exist for the given metric signature.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Always an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace acurv
