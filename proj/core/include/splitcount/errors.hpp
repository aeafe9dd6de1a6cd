#pragma once

#include <stdexcept>
#include <string>

namespace splitcount {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input: bad syntax, out-of-contract arguments,
// mismatched shapes. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Structurally valid request that cannot be served: the field is too small
// for the requested type, sizes are incompatible, or an enumeration would
// blow past the configured scale cap. The CLI maps these to exit code 3.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// --- input errors ---

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPartitionError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDimsError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidParamsError : public InputError {
 public:
  using InputError::InputError;
};

class NotPrimeError : public InputError {
 public:
  using InputError::InputError;
};

class NotPrimePowerError : public InputError {
 public:
  using InputError::InputError;
};

class ArityMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class LengthMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZeroError : public InputError {
 public:
  using InputError::InputError;
};

class NonExactDivisionError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidBackendError : public InputError {
 public:
  using InputError::InputError;
};

// --- infeasibility errors ---

class FieldTooSmallError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

class SizeMismatchError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

class ScaleLimitError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

class NotEnoughIrreduciblesError : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

}  // namespace splitcount
