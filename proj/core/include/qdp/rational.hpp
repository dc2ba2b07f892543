#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qdp {

// All purity bookkeeping is exact: coefficients and purities are rationals
// over arbitrary-precision integers.  Floating values are derived views.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(std::int64_t base, std::int64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// d^exp for possibly negative exp.
inline Rational rational_power(std::int64_t d, std::int64_t exp) {
    if (exp >= 0) return Rational(ipow(d, exp));
    return Rational(BigInt(1), ipow(d, -exp));
}

double rational_to_double(const Rational& r);

// If r == d^k for integer k (possibly negative), returns true and sets k.
bool as_power_of(const Rational& r, std::int64_t d, std::int64_t& k);

// "d^-k" when r is a signed power of d, otherwise "num/den".
std::string format_exact(const Rational& r, std::int64_t d);

// Inverse of format_exact.
Rational parse_exact(const std::string& text, std::int64_t d);

}  // namespace qdp
