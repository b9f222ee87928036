#pragma once

#include <stdexcept>
#include <string>

namespace anumber {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text (edge list, graph6, JSON) could not be decoded.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// The instance is well formed but not supported (e.g. a 2-cycle, >63 vertices).
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Arguments lie outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace anumber
