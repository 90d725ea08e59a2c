#pragma once

#include <stdexcept>
#include <string>

namespace spinboson {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid model parameters, quantum numbers or reference states.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Iterative methods that fail to converge, singular systems, broken
// internal consistency checks.
class NumericalError : public Error {
 public:
  enum class Kind { kNonConvergence, kSingular, kNoDecrease, kConsistency };

  NumericalError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Malformed run configuration (file or flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinboson
