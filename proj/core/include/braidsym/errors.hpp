#pragma once

#include <stdexcept>
#include <string>

namespace braidsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in braid groups on different numbers of strands.
class StrandMismatch : public Error {
 public:
  StrandMismatch(int lhs, int rhs)
      : Error("strand count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A search with a declared bound failed to find a witness.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void require_same_strands(int lhs, int rhs) {
  if (lhs != rhs) throw StrandMismatch(lhs, rhs);
}

}  // namespace braidsym
