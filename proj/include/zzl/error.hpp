#pragma once

#include <stdexcept>
#include <string>

namespace zzl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to an operation (size guards, out-of-range k, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Composition of maps whose boundaries do not match.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `location` is a byte offset or a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Input is well-formed but violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Explosion or functor data that fails to be a poset-shaped functor.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that should be impossible to violate.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zzl
