#pragma once

#include <stdexcept>
#include <string>

namespace nilcent {

/// Failures of exact arithmetic: division by zero, evaluation at a pole,
/// or combining values that live in different fields.
class ArithmeticError : public std::domain_error {
 public:
  enum class Kind { DivisionByZero, Pole, FieldMismatch };

  ArithmeticError(Kind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An input violates the contract of an operation. The kind lets callers
/// (and tests) tell the violated invariants apart.
class PreconditionError : public std::invalid_argument {
 public:
  enum class Kind {
    NotSquare,
    DimensionMismatch,
    NotNilpotent,
    NotCommuting,
    WeightZeroPartVanishes,
    NotIndependent,
    BadPartition,
    BadIndex,
    HypothesisFailed,
    Infeasible,
    BadField,
  };

  PreconditionError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilcent
