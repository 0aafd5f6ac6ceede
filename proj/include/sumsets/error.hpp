#pragma once

#include <stdexcept>
#include <string>

namespace sumsets {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation received arguments outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Normal form (and anything built on it) needs at least two elements.
class DegenerateSetError : public PreconditionError {
 public:
  DegenerateSetError() : PreconditionError("degenerate set") {}
};

/// A result would not fit in a 64-bit signed integer.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A family prediction was requested for parameters that no stated case covers.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumsets
