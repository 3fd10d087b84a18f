#pragma once

#include <stdexcept>
#include <string>

namespace eqnorm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad file, bad permutation, unknown id).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Ill-typed norm expression or level mismatch between operands.
class TypeError : public InputError {
 public:
  using InputError::InputError;
};

/// A norm or internal norm is not admissible in the gating indexing system.
class InadmissibleError : public TypeError {
 public:
  using TypeError::TypeError;
};

/// An operation was called outside its precondition.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace eqnorm
