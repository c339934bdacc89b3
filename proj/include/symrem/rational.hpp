#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symrem {

// All counting identities are exact; densities and epsilons are arbitrary
// precision rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" rendering of a reduced fraction, q >= 1 (e.g. "0/1", "1/27").
inline std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int int_pow(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

} // namespace symrem
