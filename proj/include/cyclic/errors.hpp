#pragma once

#include <stdexcept>
#include <string>

namespace cyclic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or precondition-violating input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A requested combination of parameters is outside what an operation supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration exceeded its explicit budget. Never a verdict.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// A result contradicts a proven property; indicates a bug, not bad input.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclic
