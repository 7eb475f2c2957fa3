#ifndef SHAPEINV_ERRORS_HPP
#define SHAPEINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shapeinv {

// Malformed or inconsistent input (bad permutation, non-partition, violated
// jump constraints, inapplicable move).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but lies outside the regime where an operation is
// defined, e.g. decomposing a permutation whose excess is not below the
// shorter column.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A size guard refused the request (exhaustive work too large without an
// explicit override).
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A self-check failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shapeinv

#endif  // SHAPEINV_ERRORS_HPP
