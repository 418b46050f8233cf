#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fitails {

// All coefficients, matrix entries and group orders use arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n!/(n-k)! = |FI(k,n)|, the number of injections [k] -> [n].
inline Int falling_factorial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) r *= n - i;
    return r;
}

// Fixed-point-free permutation count: D(0)=1, D(1)=0,
// D(n) = (n-1)(D(n-1) + D(n-2)).
inline std::uint64_t derangements(int n) {
    if (n < 0) throw std::invalid_argument("derangements: negative n");
    if (n > 20) throw std::invalid_argument("derangements: n too large for 64 bits");
    std::uint64_t a = 1, b = 0;  // D(0), D(1)
    if (n == 0) return a;
    for (int i = 2; i <= n; ++i) {
        std::uint64_t c = static_cast<std::uint64_t>(i - 1) * (a + b);
        a = b;
        b = c;
    }
    return b;
}

inline long long to_long_checked(const Int& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
    return static_cast<long long>(v);
}

}  // namespace fitails
