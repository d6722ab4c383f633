#include "pisano/integers.hpp"

namespace pisano {

ExtendedGcd extended_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0;
    Int x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = x2;
        y1 = y2;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

Int int_pow(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace pisano
