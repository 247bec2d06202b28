#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace windrose {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, int exp) {
    Rational r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

inline BigInt bigint_pow(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

inline std::string rational_str(const Rational& r) { return r.str(); }

inline double rational_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace windrose
