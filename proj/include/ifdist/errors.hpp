#pragma once

#include <stdexcept>
#include <string>

namespace ifdist {

/// A parameter failed validation. `field()` names the offending parameter.
class InvalidParam : public std::invalid_argument {
 public:
  InvalidParam(std::string field, std::string reason)
      : std::invalid_argument(field + ": " + reason),
        field_(std::move(field)),
        reason_(std::move(reason)) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

/// Argument outside the mathematical domain of a function (e.g. ln_gamma(-1)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive refinement ran out of its subdivision budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCase : public std::invalid_argument {
 public:
  explicit UnknownCase(const std::string& name)
      : std::invalid_argument("unknown distribution: " + name) {}
};

/// Operation not defined for the given subfamily.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed distribution spec string.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ifdist
