#pragma once

#include <stdexcept>
#include <string>

namespace billiards {

// Malformed input: bad vertex labels, unparsable specs, invalid family
// parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that is well formed but outside what the engine supports
// (vertex counts, state-space sizes, unknown check ids).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An internal invariant failed. Always a bug; never recovered from.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace billiards
