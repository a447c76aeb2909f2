#pragma once

#include <stdexcept>
#include <string>

namespace edgerake {

// Precondition violations on caller-supplied data (bad weights, wrong graph kind, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative method did not reach its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense oracle asked to run beyond the size it can handle exactly.
class OracleLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace edgerake
