#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sequiv {

// Arbitrary-precision integers and rationals. Everything in this library is
// exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace sequiv
