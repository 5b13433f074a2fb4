#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace creg {

/// Arbitrary-precision exact rational. Sign decisions in the spectral and
/// design arithmetic must never go through floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace creg
