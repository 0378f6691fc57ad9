#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace spectral {

// Expression templates are disabled so values compose cleanly with Eigen and auto.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Raised when an internal invariant fails (integrality of a representation
/// multiplicity, infeasibility of a system that contains the origin, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) {
    throw InternalError("expected an integer, got " + q.str());
  }
  return numerator_of(q);
}

inline Integer ipow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace spectral
