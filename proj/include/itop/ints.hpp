#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace itop {

// All coefficient arithmetic in this library is exact: arbitrary-precision
// integers and rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Int binomial(long n, long k);

}  // namespace itop
