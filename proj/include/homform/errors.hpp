#pragma once

#include <stdexcept>
#include <string>

namespace homform {

// Malformed input (files, shapes, out-of-range indices).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed the configured size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that the theory guarantees failed to hold; signals a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homform
