#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

/// Operands of incompatible sizes (permutations of different n, matrices of different dim).
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a computational cap (factorial enumeration guards, verification caps).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would overflow.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An internal combinatorial invariant was violated. Never expected to fire.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gelfand
