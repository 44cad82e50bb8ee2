#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

#include "errors.hpp"

namespace qts {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact x^e for rational x != 0 and integer e of either sign.
inline Rational rational_pow(const Rational& x, int e) {
    if (e == 0)
        return Rational(1);
    if (x == 0)
        fail(Errc::bad_argument, "rational_pow: zero base with nonzero exponent");
    Rational base = e > 0 ? x : Rational(1) / x;
    int n = e > 0 ? e : -e;
    Rational r(1);
    for (int k = 0; k < n; ++k)
        r *= base;
    return r;
}

/// Canonical text: "p" when the denominator is 1, else "p/q".
inline std::string rational_text(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Column -> positive rational, the q=1 specialization data.
using ValueMap = std::map<int, Rational>;

} // namespace qts
