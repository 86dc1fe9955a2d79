#pragma once

#include <stdexcept>
#include <string>

namespace ascenter {

// Malformed input: bad dimensions, empty cycles, out-of-range parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation does not apply to this sequence kind or space.
class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical identity that must hold by construction failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace ascenter
