#pragma once

#include <stdexcept>
#include <string>

namespace selmer {

/// A precondition on an argument was violated (bad prime, singular matrix, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduction data requested at a prime the classifier does not cover (p < 5).
class UnsupportedPrimeError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// The evaluation point chosen for the cubic invariant is not a unit; pick another.
class NonUnitPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A work guard (enumeration size, descent depth) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace selmer
