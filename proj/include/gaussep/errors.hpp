#ifndef GAUSSEP_ERRORS_HPP
#define GAUSSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaussep {

// Bad arguments: empty index sets, out-of-range modes, zero mode counts.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The covariance matrix does not describe an admissible state for the
// requested operation (nonphysical, not positive definite, degenerate mode).
class InvalidState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scaling parameter too close to zero.
class SingularScaling : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Solver failure or a result that should be real but is not.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gaussep

#endif  // GAUSSEP_ERRORS_HPP
