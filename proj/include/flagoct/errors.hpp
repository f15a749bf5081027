#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagoct {

/// Operands live in different polynomial rings.
class RingMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation exceeded one of the fixed size bounds.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public std::runtime_error {
 public:
  explicit UnknownVariableError(const std::string& name)
      : std::runtime_error("unknown variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace flagoct
