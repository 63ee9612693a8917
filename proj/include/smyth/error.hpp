#pragma once

#include <stdexcept>
#include <string>

namespace smyth {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or axiom-violating input (bad JSON, non-transitive order,
/// a family that is not a topology, a precondition that does not hold).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured cap was exceeded while enumerating.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A property that must hold (a proof step, a lattice law, an implication
/// between verdicts) failed on a concrete instance.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace smyth
