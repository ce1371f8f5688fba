#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace shc {

// Counts grow super-exponentially; everything countable is exact and unbounded.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace shc
