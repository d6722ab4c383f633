#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pisano {

// Arbitrary-precision signed integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

// Returns (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g.
struct ExtendedGcd {
    Int g;
    Int x;
    Int y;
};

ExtendedGcd extended_gcd(Int a, Int b);

// p^e for small exponents.
Int int_pow(const Int& base, unsigned exp);

}  // namespace pisano
