#pragma once

#include <map>
#include <mutex>
#include <string>

#include "fanchar/errors.hpp"
#include "fanchar/number_theory.hpp"
#include "fanchar/polynomial.hpp"

namespace fanchar {

namespace detail {
inline std::map<long, IntPolynomial>& cyclotomic_memo() {
    static std::map<long, IntPolynomial> memo;
    return memo;
}
inline std::mutex& cyclotomic_mutex() {
    static std::mutex mu;
    return mu;
}
}  // namespace detail

// l-th cyclotomic polynomial, by exact recursive division:
//   Phi_l = (q^l - 1) / prod_{d | l, d < l} Phi_d.
// Memoized; the table is guarded for concurrent use.
inline IntPolynomial cyclotomic(long l) {
    if (l < 1) throw InvariantViolation("cyclotomic: index must be positive");
    {
        std::lock_guard<std::mutex> lock(detail::cyclotomic_mutex());
        auto it = detail::cyclotomic_memo().find(l);
        if (it != detail::cyclotomic_memo().end()) return it->second;
    }
    IntPolynomial result;
    if (l == 1) {
        result = IntPolynomial{Int(-1), Int(1)};  // q - 1
    } else {
        IntPolynomial den = IntPolynomial::one();
        for (long d : divisors(l))
            if (d != l) den = den * cyclotomic(d);
        result = poly_exact_divide(q_power_minus_one(l), den);
    }
    std::lock_guard<std::mutex> lock(detail::cyclotomic_mutex());
    detail::cyclotomic_memo().emplace(l, result);
    return result;
}

// deg Phi_l = phi(l); cheaper than materializing the polynomial.
inline long cyclotomic_degree(long l) {
    return euler_phi(l);
}

// Ratio deg Phi_a / deg Phi_b of two cyclotomic degrees; must be exact.
inline long cyclotomic_degree_ratio(long a, long b) {
    long da = cyclotomic_degree(a), db = cyclotomic_degree(b);
    if (da % db != 0)
        throw InvariantViolation("cyclotomic_degree_ratio: deg Phi_" + std::to_string(a) +
                                 " not divisible by deg Phi_" + std::to_string(b));
    return da / db;
}

// Exponents a_l in a product  prod_{l >= 2, l | n}  Phi_l^{a_l}.
// n records the order of the group element the factored polynomial came from.
struct CyclotomicFactorization {
    std::map<long, long> exponents;  // l -> a_l, only nonzero entries
    long n = 1;

    long exponent(long l) const {
        auto it = exponents.find(l);
        return it == exponents.end() ? 0 : it->second;
    }

    IntPolynomial reconstruct() const {
        IntPolynomial p = IntPolynomial::one();
        for (const auto& [l, a] : exponents) p = p * cyclotomic(l).pow(a);
        return p;
    }

    bool operator==(const CyclotomicFactorization& o) const {
        return exponents == o.exponents && n == o.n;
    }
};

// Factor p as a product of cyclotomic polynomials Phi_l with l | m, l >= 2,
// by trial exact division.  Throws NotCyclotomicProduct when a nontrivial
// remainder survives every divisor.
inline CyclotomicFactorization factor_into_cyclotomics(const IntPolynomial& p, long m) {
    if (m < 1) throw InvariantViolation("factor_into_cyclotomics: order must be positive");
    CyclotomicFactorization fac;
    fac.n = m;
    IntPolynomial rem = p;
    for (long l : divisors(m)) {
        if (l < 2) continue;
        const IntPolynomial phi = cyclotomic(l);
        IntPolynomial q;
        long count = 0;
        while (rem.degree() >= phi.degree() && poly_divides(phi, rem, &q)) {
            rem = q;
            ++count;
        }
        if (count > 0) fac.exponents[l] = count;
    }
    if (!(rem == IntPolynomial::one()))
        throw NotCyclotomicProduct("remainder " + rem.str() +
                                   " is not a product of cyclotomics for order " +
                                   std::to_string(m));
    return fac;
}

}  // namespace fanchar
