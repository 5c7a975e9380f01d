#pragma once

#include <stdexcept>
#include <string>

namespace covlab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed permutation, cycle type, or recipe text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different point sets.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation refused to run because its enumeration bound would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A candidate configuration is not admissible (e.g. a covering component equals the group).
class InvalidCandidate : public Error {
 public:
  using Error::Error;
};

/// A computed object failed one of its own consistency checks.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace covlab
