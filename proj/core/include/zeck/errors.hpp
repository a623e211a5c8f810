#pragma once

#include <stdexcept>

namespace zeck {

/// An argument violates an operation's precondition (malformed or
/// non-canonical digits, wrong alphabet, too short for a window pass).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A postcondition the algorithms guarantee did not hold. Never expected;
/// seeing one means a bug or an uncovered rewrite configuration.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZeroError : public DomainError {
 public:
  DivisionByZeroError() : DomainError("division by zero") {}
};

/// Encoded stream is truncated, inconsistent or not a stream at all.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zeck
