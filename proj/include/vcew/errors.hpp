#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcew {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Anything the caller handed us that is unusable. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

class MalformedAssignment : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// The restricted pre-weighting solver only accepts weight-1 pre-weights.
class UnsupportedVariant : public InputError {
 public:
  using InputError::InputError;
};

// Search space exceeds the configured enumeration ceiling. Exit code 3.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A solver produced something that failed its own certificate check.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace vcew
