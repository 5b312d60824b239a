#pragma once

#include <stdexcept>
#include <string>

namespace uniton {

/// Malformed or out-of-contract input (bad syntax, wrong dimensions, failed
/// preconditions). The CLI maps this to exit code 3.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric pipeline postcondition failed (singular point, pole, roundtrip
/// mismatch). The CLI maps this to exit code 4.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uniton
