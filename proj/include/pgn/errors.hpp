#ifndef PGN_ERRORS_HPP
#define PGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgn {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric or structural argument violates a documented precondition.
class BadParametersError : public Error {
 public:
  explicit BadParametersError(const std::string& what) : Error(what) {}
};

/// Evaluation requested outside the interval on which a path is defined.
class OutOfDomainError : public Error {
 public:
  explicit OutOfDomainError(const std::string& what) : Error(what) {}
};

/// Vector/matrix dimensions do not line up.
class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Malformed text input (rational literal, system document, map document).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation requiring a valid system received an invalid one.
class InvalidSystemError : public Error {
 public:
  explicit InvalidSystemError(const std::string& what) : Error(what) {}
};

/// Mesh validation was requested for a path that is not an exact n-system.
class NotAnNSystemError : public Error {
 public:
  explicit NotAnNSystemError(const std::string& what) : Error(what) {}
};

/// A self-similar system whose first component stays bounded.
class NotProperError : public Error {
 public:
  explicit NotProperError(const std::string& what) : Error(what) {}
};

/// Normalization of a vector whose coordinates sum to zero.
class ZeroSumError : public Error {
 public:
  explicit ZeroSumError(const std::string& what) : Error(what) {}
};

/// Normalization input that is not nonnegative ascending.
class NotSortedError : public Error {
 public:
  explicit NotSortedError(const std::string& what) : Error(what) {}
};

/// A spectrum estimate was requested over an empty tail window.
class EmptyWindowError : public Error {
 public:
  explicit EmptyWindowError(const std::string& what) : Error(what) {}
};

/// A probe was invoked on a system that fails its containment hypotheses.
class PreconditionViolatedError : public Error {
 public:
  explicit PreconditionViolatedError(const std::string& what) : Error(what) {}
};

/// The generator constraint hook rejected every admissible move.
class InfeasibleStepError : public Error {
 public:
  explicit InfeasibleStepError(const std::string& what) : Error(what) {}
};

}  // namespace pgn

#endif  // PGN_ERRORS_HPP
