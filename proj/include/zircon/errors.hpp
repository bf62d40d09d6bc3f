#pragma once

#include <stdexcept>

namespace zircon {

/// Malformed input: unknown ids, cycles, redundant covers, bad document shapes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal consistency check failed. The checked statements are theorems,
/// so this only fires on implementation bugs.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zircon
