#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace consec {

/// Arbitrary-precision integer. Publicly returned coefficient values are
/// always nonnegative; negative values only occur inside alternating sums.
using ExactInteger = boost::multiprecision::cpp_int;

/// Reduced rational with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Invalid caller input: bad (n, k), p outside [0, 1], malformed values.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient index outside [0, n].
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Bound requested at an index where an exact formula applies.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request exceeds an oracle's computational budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline std::string to_decimal(const ExactInteger& v) { return v.str(); }

}  // namespace consec
