#pragma once

#include <stdexcept>
#include <string>

namespace bost {

/// Malformed input or violated precondition (zero denominator, zero polynomial, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation that needs rational coefficients was asked for in integer mode.
class CoefficientModeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Ghost data with no integral Witt vector preimage.
class NotWittVector : public DomainError {
 public:
  using DomainError::DomainError;
};

class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An object map that does not send covering relations to relations.
class RelationViolation : public DomainError {
 public:
  RelationViolation(const std::string& what, std::size_t family)
      : DomainError(what), family_(family) {}
  std::size_t family() const noexcept { return family_; }

 private:
  std::size_t family_;
};

}  // namespace bost
