#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

// Malformed input: bad dimensions, unparsable values, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on data that does not satisfy its precondition
// (for example, vertex enumeration on a non-simple arrangement).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computed structure violated an invariant that must hold for simple
// arrangements. Signals an enumeration bug or a non-simple input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDimensionError : public InputError {
 public:
  using InputError::InputError;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arrlab
