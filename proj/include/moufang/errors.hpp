#pragma once

#include <stdexcept>
#include <string>

namespace moufang {

// Malformed input: bad table shape, out-of-range entries, unparseable files,
// invalid construction specs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on data that violates its stated precondition
// (e.g. quotient by a non-normal subloop).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration was refused because the loop order exceeds the configured
// bound.
class BoundExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural assertion backed by a theorem failed on concrete data; this
// indicates either corrupted input or a bug, never a legitimate outcome.
class TheoremViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (e.g. a computed centralizer is not closed).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moufang
