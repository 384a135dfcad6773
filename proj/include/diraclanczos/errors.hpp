#pragma once

#include <stdexcept>
#include <string>

namespace diraclanczos {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A constructor or function argument is out of its documented domain.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// Two spinors (or a spinor and an operator) live on different grids.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// A start vector or normalization target has zero (or non-finite) norm.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

// An operation was requested in a state that does not admit it,
// e.g. stepping an iteration that already reported breakdown.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Per-iteration data passed to the trace matcher is inconsistent
// with the iteration history accumulated so far.
class IterationMismatchError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed to converge or produced non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a run artifact (config, CSV, JSON) failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// A run configuration file or flag set is malformed or inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace diraclanczos
