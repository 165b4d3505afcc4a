#pragma once

#include <stdexcept>
#include <string>

namespace hiwsd {

// Data-level failures (bad input bytes, malformed records, broken
// invariants).  The CLI maps these to exit code 1.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecodeError : DataError {
  using DataError::DataError;
};

struct ParseError : DataError {
  using DataError::DataError;
};

struct ValidationError : DataError {
  using DataError::DataError;
};

struct TrainingError : DataError {
  using DataError::DataError;
};

struct EvalError : DataError {
  using DataError::DataError;
};

// Caller mistakes: unknown method names, out-of-range parameters, missing
// files.  Exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Prediction-domain failures, e.g. the target word does not occur in the
// text to disambiguate.  Exit code 3.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hiwsd
