#pragma once

#include <stdexcept>
#include <string>

namespace crsym {

/// Operands live in incompatible variable contexts or have the wrong shape.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A model or PQR triple violates one of its structural invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed JSON input (missing keys, wrong types, non-integral numbers).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural statement that must hold on valid input was found false.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace crsym
