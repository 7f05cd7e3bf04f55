#pragma once

#include <stdexcept>
#include <string>

namespace hamcode {

// Operands live in different spaces (mismatched word length or alphabet size).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration (vertex space, orbit, search tree) would exceed its cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex was required to belong to a code but does not.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structural precondition of an operation failed (e.g. metric undefined on
// a code with fewer than two words).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A file or serialized document is malformed or violates its format.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hamcode
