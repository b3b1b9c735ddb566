#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "fanchar/errors.hpp"

namespace fanchar {

// Exact arithmetic everywhere: no floating point in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact quotient; throws if the division leaves a remainder.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw InvariantViolation("exact_div: zero divisor");
    Int q = num / den;
    if (q * den != num) {
        std::ostringstream os;
        os << "exact_div: " << num << " not divisible by " << den;
        throw InvariantViolation(os.str());
    }
    return q;
}

inline Int int_pow(Int base, long exp) {
    if (exp < 0) throw InvariantViolation("int_pow: negative exponent");
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// binomial(n, k) over arbitrary precision; 0 when k < 0 or k > n (n >= 0).
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline std::string to_string(const Int& v) {
    return v.str();
}

inline std::string to_string(const Rat& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline bool is_integer(const Rat& v) {
    return boost::multiprecision::denominator(v) == 1;
}

}  // namespace fanchar
