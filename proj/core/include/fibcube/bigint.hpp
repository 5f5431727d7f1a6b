#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibcube {

// Counts grow combinatorially with n, so everything that counts cubes is kept
// in exact arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient with the zero convention used throughout:
// C(a, b) = 0 whenever b < 0 or b > a.
BigInt binomial(long long a, long long b);

}  // namespace fibcube
