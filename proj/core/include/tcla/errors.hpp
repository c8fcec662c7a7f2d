#pragma once

#include <stdexcept>
#include <string>

namespace tcla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed user input: rationals, weight files, chi strings,
/// unknown algebra names, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidElementError : public InputError {
 public:
  using InputError::InputError;
};

class NotARootError : public InputError {
 public:
  using InputError::InputError;
};

class DegreeError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownAlgebraError : public InputError {
 public:
  using InputError::InputError;
};

/// The algebra data violates a structural hypothesis (e.g. a singular pairing).
class InvalidAlgebraError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcla
