#ifndef HARMLIKE_RATIONAL_HPP
#define HARMLIKE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace harmlike {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// normalized (lowest terms, positive denominator) and throws on division
// by zero, which is exactly the contract the exact-arithmetic paths need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace harmlike

#endif  // HARMLIKE_RATIONAL_HPP
