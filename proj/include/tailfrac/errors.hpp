#ifndef TAILFRAC_ERRORS_HPP
#define TAILFRAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tailfrac {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative scheme failed to converge. The message carries the inputs
/// and the state at the point of failure.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unusable input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data that is well formed but carries no information for the requested
/// estimate (e.g. all top order statistics tied).
class DegenerateDataError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace tailfrac

#endif  // TAILFRAC_ERRORS_HPP
