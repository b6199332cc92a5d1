#pragma once

#include <stdexcept>
#include <string>

namespace mcx {

/// Raised for inputs outside an operation's domain (bad order, malformed
/// permutation, value not satisfying a required equation, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands of different multicomplex orders.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration would exceed the caller's element budget.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inconsistent or singular linear system over GF(2).
class SingularSystem : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mcx
