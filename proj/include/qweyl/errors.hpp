#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Instance data is inconsistent: rank mismatch, broken antisymmetry, bad index.
class InstanceError : public std::invalid_argument {
 public:
  explicit InstanceError(const std::string& what) : std::invalid_argument(what) {}
};

/// A parameter lies outside the domain of an operation (q = 1, e_i(λ) = 0, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A scalar was required to vanish at t = 1 but does not.
class DivisibilityError : public std::domain_error {
 public:
  explicit DivisibilityError(const std::string& what) : std::domain_error(what) {}
};

/// The image of an element under the generator rescaling keeps a (q̃_i - 1)
/// denominator, so it only exists in a localization of the algebra.
class LocalizationError : public std::domain_error {
 public:
  explicit LocalizationError(const std::string& what) : std::domain_error(what) {}
};

/// An identity that holds for every input failed. Signals a bug in the
/// arithmetic core, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Expression text could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qweyl
