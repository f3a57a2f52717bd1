#pragma once

#include <stdexcept>
#include <string>

namespace raagham {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, unknown vertex names, violated
// preconditions on user-supplied arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configurable resource bound (closure size, enumeration count) was hit.
// Raised instead of returning a possibly wrong answer.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

// A geometric construction could not satisfy its invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The implicit midpoint solver failed even after step halving.
class IntegratorDivergence : public Error {
 public:
  using Error::Error;
};

}  // namespace raagham
