#pragma once

#include <stdexcept>

namespace burch {

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two computations that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace burch
