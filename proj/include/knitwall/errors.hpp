#pragma once

#include <stdexcept>
#include <string>

namespace knitwall {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclass to a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed an argument outside the operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A transform was applied outside the range where it is meaningful
/// (e.g. a dimension vector would acquire a negative entry).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed: two routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A step, state or subset budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Knitting did not reach a terminal -1 within the step cap.
class NonTerminationError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace knitwall
