#pragma once

#include <stdexcept>
#include <string>

namespace kcyc {

/// Raised when an argument violates an operation's precondition
/// (bad modulus, even k, non-primitive character, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two cyclotomic values from different levels were combined.
class level_mismatch : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// An internal consistency check failed: a value that must be integral,
/// rational or positive was not. Always indicates a bug.
class computation_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw precondition_error(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw computation_error(message);
}

}  // namespace kcyc
