#pragma once

#include <stdexcept>
#include <string>

namespace idealforge {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different rings (or a ring and a foreign field).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or ideal text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation ran past its time budget or a size guard.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace idealforge
