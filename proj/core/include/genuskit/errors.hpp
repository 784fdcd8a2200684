#pragma once

#include <stdexcept>
#include <string>

namespace genuskit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the argument values was violated (non-invertible
/// constant term, wrong parity, parse failure, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input is not known to a high enough order to produce the result.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different ambient objects (indeterminates,
/// generator tables, weight bounds).
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree by construction did not. Raised only when the
/// implementation itself is wrong, never for bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace genuskit
