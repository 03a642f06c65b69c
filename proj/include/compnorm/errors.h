#pragma once

#include <stdexcept>
#include <string>

namespace compnorm {

// Argument outside the mathematical domain of an operation (e.g. sigma <= 1
// for zeta, a symbol outside the Gordon-Hedenmalm class).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A precondition on the shape of the input failed (lengths, sums, caps).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative or truncated computation could not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace compnorm
