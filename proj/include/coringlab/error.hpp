#pragma once

#include <stdexcept>
#include <string>

namespace coringlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An input object fails one of its defining axioms (associativity, module
// laws, coassociativity, ...). The message names the offending indices.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotProjective : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed definition file: bad JSON, wrong shape, unreadable scalar.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnresolvedReference : public Error {
 public:
  using Error::Error;
};

// A result that the mathematics guarantees failed to verify. This signals a
// bug in the library, never a property of the input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace coringlab
