#pragma once

#include <stdexcept>
#include <string>

namespace lietrip {

/// Operand shapes or fields do not match.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data violates a structural invariant (an axiom, a hom law, a
/// grading). The message carries the witness.
class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input; the message names the location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result the construction guarantees failed to hold. Never expected for
/// valid input; signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lietrip
