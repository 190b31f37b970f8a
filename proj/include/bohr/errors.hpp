#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or radius lies outside the admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational expression was evaluated at (or within tolerance of) its pole.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested operation is not defined for this input shape.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Brute-force work would exceed the configured coefficient budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A functional that should be monotone in the radius was observed decreasing.
class MonotonicityError : public Error {
 public:
  using Error::Error;
};

/// The root bracket has no sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// More than one sign change was found inside the bracket.
class NonUniqueRootError : public Error {
 public:
  using Error::Error;
};

}  // namespace bohr
