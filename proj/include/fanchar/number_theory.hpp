#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "fanchar/errors.hpp"
#include "fanchar/numeric.hpp"

namespace fanchar {

// Sorted list of positive divisors of n.
inline std::vector<long> divisors(long n) {
    if (n <= 0) throw InvariantViolation("divisors: argument must be positive");
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// Distinct prime factors, ascending.
inline std::vector<long> prime_factors(long n) {
    if (n <= 0) throw InvariantViolation("prime_factors: argument must be positive");
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Returns (p, k) with n = p^k if n is a prime power (k >= 1), else (0, 0).
inline std::pair<long, long> prime_power_split(long n) {
    if (n < 2) return {0, 0};
    auto ps = prime_factors(n);
    if (ps.size() != 1) return {0, 0};
    long p = ps[0], k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return {p, k};
}

// Classical Moebius function via factorization.
inline long moebius_nt(long m) {
    if (m <= 0) throw InvariantViolation("moebius_nt: argument must be positive");
    long sign = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;  // squared prime factor
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

namespace detail {
inline long moebius_recursive_impl(long m, std::map<long, long>& memo) {
    if (m == 1) return 1;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    long s = 0;
    for (long d : divisors(m))
        if (d != m) s += moebius_recursive_impl(d, memo);
    memo.emplace(m, -s);
    return -s;
}
}  // namespace detail

// Independent definition: mu(1) = 1 and sum of mu over divisors of m vanishes
// for m > 1.  Used as an oracle against moebius_nt.
inline long moebius_recursive(long m) {
    if (m <= 0) throw InvariantViolation("moebius_recursive: argument must be positive");
    std::map<long, long> memo;  // per-call, so the function stays pure
    return detail::moebius_recursive_impl(m, memo);
}

// Largest i with p^i | N.
inline long p_adic_valuation(long p, long N) {
    if (!is_prime(p)) throw InvariantViolation("p_adic_valuation: p must be prime");
    if (N <= 0) throw InvariantViolation("p_adic_valuation: N must be positive");
    long i = 0;
    while (N % p == 0) {
        N /= p;
        ++i;
    }
    return i;
}

inline long euler_phi(long n) {
    if (n <= 0) throw InvariantViolation("euler_phi: argument must be positive");
    long result = n;
    for (long p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

inline long lcm_long(long a, long b) {
    return a / std::gcd(a, b) * b;
}

}  // namespace fanchar
