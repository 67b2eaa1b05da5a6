#pragma once

#include <stdexcept>
#include <string>

namespace sfenc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different qubit counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Graph or path structure is invalid (disconnected graph, self-loop, a path
/// step that is not an edge, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (bad term indices, inconsistent port data, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A guard on enumeration or matrix size was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal algebraic invariant failed; usually signals a corrupted
/// encoding.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A fermionic term references an edge the interaction graph does not have.
class CompilationError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfenc
