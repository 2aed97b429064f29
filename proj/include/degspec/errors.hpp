#pragma once

#include <stdexcept>
#include <string>

namespace degspec {

// Every failure raised by the library derives from Error so callers can catch
// one type; the subclasses let tests and the CLI tell failure classes apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Operation not available for this model or map (no blowdown data, no cone
// generators, unsupported codimension).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Unknown built-in model name or parameter out of range.
class SpecError : public Error {
 public:
  using Error::Error;
};

class NotAmpleError : public Error {
 public:
  using Error::Error;
};

// Model data that violates a structural invariant (projection formula,
// associativity, infeasible norm LP, ...).
class ModelDataError : public Error {
 public:
  using Error::Error;
};

class NonDominantError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent JSON input.
class IngestionError : public Error {
 public:
  using Error::Error;
};

}  // namespace degspec
