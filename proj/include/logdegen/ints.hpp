#pragma once
// Exact arithmetic substrate. Everything in this library is integer or
// rational arithmetic on these types; fixed-width integers and floating
// point are deliberately absent.

#include <boost/multiprecision/cpp_int.hpp>

namespace logdegen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor division (C++ '/' truncates toward zero)
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// nearest-integer division, used to keep remainders small during reduction.
// After q = fdiv(a,b) the remainder r = a - q*b satisfies r/b in [0,1),
// so rounding to nearest means bumping q when r/b > 1/2.
inline Int round_div(const Int& a, const Int& b) {
    Int q = fdiv(a, b);
    Int r = a - q * b;
    if (2 * abs_int(r) > abs_int(b)) ++q;
    return q;
}

} // namespace logdegen
