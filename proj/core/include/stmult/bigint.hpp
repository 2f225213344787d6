#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace stmult {

// All multiplicities, dimensions and series coefficients are exact integers.
using Int = boost::multiprecision::cpp_int;

// Exponents and degrees stay machine-sized; overflow here means the request
// is out of any computable range, so we refuse instead of wrapping.
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exponent arithmetic");
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exponent arithmetic");
    return r;
}

inline long long checked_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace stmult
