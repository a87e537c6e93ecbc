#ifndef IDEMKIT_ERRORS_HPP
#define IDEMKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idemkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured size cap (group order, lattice, character table, subset search) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A mark vector or coefficient vector has a denominator divisible by a prime in P.
class NotPLocal : public Error {
 public:
  using Error::Error;
};

class NotPPerfect : public Error {
 public:
  using Error::Error;
};

class NonIntegerValues : public Error {
 public:
  using Error::Error;
};

/// Raised when a computed object violates an invariant that should always hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace idemkit

#endif  // IDEMKIT_ERRORS_HPP
