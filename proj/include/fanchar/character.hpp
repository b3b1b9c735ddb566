#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fanchar/action.hpp"
#include "fanchar/cyclotomic.hpp"
#include "fanchar/errors.hpp"
#include "fanchar/fan.hpp"
#include "fanchar/number_theory.hpp"
#include "fanchar/polynomial.hpp"

namespace fanchar {

// ---------------------------------------------------------------------------
// closed character formulas
//
// For a group element g = c^j acting on the fan, the graded character of the
// cohomology representation is
//     chi[q](g) = P(q) * Q_g(q),
// where P is the h-polynomial of the fixed subcomplex and
//     Q_g(q) = det(1 - q g) / (1 - q)^delta(g)
// collects the non-unit eigenvalues of g.  Evaluating at q = 1 gives the
// ungraded character value  chi_u(g) = |fixed facets| * Q_g(1).
// ---------------------------------------------------------------------------

// Q_{c^j}: the exact quotient det(1 - q c^j) / (1 - q)^{delta(c^j)}.
inline IntPolynomial q_polynomial(const GroupAction& action, long j) {
    const IntMatrix g = action.generator.power(j);
    IntPolynomial num = char_poly_one_minus_qg(g);
    const std::size_t delta = fixed_subspace_dimension(g);
    IntPolynomial q = poly_exact_divide(num, one_minus_q().pow(static_cast<long>(delta)));
    if (q.coeff(0) != 1)
        throw InvariantViolation("q_polynomial: constant term is not 1");
    return q;
}

inline IntPolynomial graded_character(const Fan& fan, const GroupAction& action, long j) {
    const FixedData fixed = fixed_subcomplex(fan, action, j);
    const IntPolynomial h = h_polynomial(f_vector(fixed.complex), fixed.delta);
    return h * q_polynomial(action, j);
}

// chi_u(c^j) for every divisor j of the order.
inline std::map<long, Int> ungraded_character(const Fan& fan, const GroupAction& action) {
    std::map<long, Int> values;
    for (long j : divisors(action.order)) {
        const FixedData fixed = fixed_subcomplex(fan, action, j);
        values[j] = Int(facet_count(fixed.complex)) * q_polynomial(action, j)(1);
    }
    return values;
}

// First N+1 coefficients of the graded trace of c^j on the full face ring,
//   P(q) / (1 - q)^delta  =  P(q) * sum_i binomial(i + delta - 1, delta - 1) q^i.
inline std::vector<Int> face_ring_series(const Fan& fan, const GroupAction& action, long j,
                                         long N) {
    if (N < 0) throw InvariantViolation("face_ring_series: negative truncation order");
    const FixedData fixed = fixed_subcomplex(fan, action, j);
    const IntPolynomial p = h_polynomial(f_vector(fixed.complex), fixed.delta);
    const long delta = static_cast<long>(fixed.delta);

    std::vector<Int> coeffs(static_cast<std::size_t>(N) + 1, Int(0));
    for (long m = 0; m <= N; ++m) {
        for (long i = 0; i <= std::min(m, p.degree()); ++i) {
            if (delta == 0) {
                if (i == m) coeffs[m] += p.coeff(i);
            } else {
                coeffs[m] += p.coeff(i) * binomial(m - i + delta - 1, delta - 1);
            }
        }
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// decomposition into transitive permutation characters
//
// Characters are stored as value maps over the divisors of n, one value per
// cyclic subgroup <c^l>.  The transitive permutation character induced from
// <c^l> takes the value l on elements of <c^l> and 0 elsewhere; its
// multiplicity in a rational character is F(l) / l with F the Moebius
// transform over the subgroup lattice.
// ---------------------------------------------------------------------------

inline std::map<long, Int> induced_character(long l, long n) {
    if (l < 1 || n % l != 0)
        throw InvariantViolation("induced_character: subgroup index must divide the order");
    std::map<long, Int> values;
    for (long j : divisors(n)) values[j] = (j % l == 0) ? Int(l) : Int(0);
    return values;
}

// Moebius function of the interval [<c^l>, <c^j>] in the subgroup lattice;
// the interval is isomorphic to the divisor lattice of l / j.
inline long subgroup_moebius(long l, long j) {
    if (j < 1 || l % j != 0)
        throw InvariantViolation("subgroup_moebius: second argument must divide the first");
    return moebius_nt(l / j);
}

namespace detail {
inline void require_divisor_map(const std::map<long, Int>& values, long n, const char* who) {
    for (long d : divisors(n))
        if (!values.count(d))
            throw InvariantViolation(std::string(who) + ": missing value for divisor " +
                                     std::to_string(d));
}
}  // namespace detail

// F(l) = sum_{j | l} mu(l/j) * chi(c^j).
inline std::map<long, Int> f_transform(const std::map<long, Int>& values, long n) {
    detail::require_divisor_map(values, n, "f_transform");
    std::map<long, Int> f;
    for (long l : divisors(n)) {
        Int acc = 0;
        for (long j : divisors(l)) acc += Int(subgroup_moebius(l, j)) * values.at(j);
        f[l] = acc;
    }
    return f;
}

// chi(c^j) = sum_{l | j} F(l); exact inverse of f_transform.
inline std::map<long, Int> f_transform_inverse(const std::map<long, Int>& f, long n) {
    detail::require_divisor_map(f, n, "f_transform_inverse");
    std::map<long, Int> values;
    for (long j : divisors(n)) {
        Int acc = 0;
        for (long l : divisors(j)) acc += f.at(l);
        values[j] = acc;
    }
    return values;
}

enum class Verdict { Permutation, NotPermutation };

inline const char* verdict_name(Verdict v) {
    return v == Verdict::Permutation ? "Permutation" : "NotPermutation";
}

// Multiplicities of the transitive permutation characters in a rational
// character, plus the verdict.  NotPermutation is a finding, not an error:
// witness_divisor carries the smallest subgroup index whose multiplicity is
// negative or fractional.
struct Decomposition {
    std::map<long, Int> f_values;
    std::map<long, Rat> multiplicities;
    Verdict verdict = Verdict::Permutation;
    long witness_divisor = 0;
    Rat witness_multiplicity = 0;
};

inline Decomposition decompose(const std::map<long, Int>& values, long n) {
    detail::require_divisor_map(values, n, "decompose");
    Decomposition dec;
    dec.f_values = f_transform(values, n);
    for (long l : divisors(n)) {
        Rat m(dec.f_values.at(l), Int(l));
        if ((!is_integer(m) || m < 0) && dec.witness_divisor == 0) {
            dec.verdict = Verdict::NotPermutation;
            dec.witness_divisor = l;
            dec.witness_multiplicity = m;
        }
        dec.multiplicities[l] = std::move(m);
    }

    // reconstruction identity: the multiplicities rebuild the input exactly
    for (long j : divisors(n)) {
        Rat acc = 0;
        for (long l : divisors(n))
            if (j % l == 0) acc += dec.multiplicities.at(l) * Int(l);
        if (acc != Rat(values.at(j)))
            throw InvariantViolation("decompose: reconstruction failed at divisor " +
                                     std::to_string(j));
    }
    return dec;
}

// ---------------------------------------------------------------------------
// per-divisor character bundle and the per-degree (graded) decomposition
// ---------------------------------------------------------------------------

struct CharacterData {
    long divisor = 1;
    FixedData fixed;
    IntPolynomial q_poly;
    CyclotomicFactorization cyclo;
    IntPolynomial graded;
    Int ungraded = 0;
};

inline CharacterData character_data(const Fan& fan, const GroupAction& action, long j) {
    CharacterData data;
    data.divisor = j;
    data.fixed = fixed_subcomplex(fan, action, j);
    data.q_poly = q_polynomial(action, j);
    data.cyclo =
        factor_into_cyclotomics(data.q_poly, action.order / std::gcd(action.order, j));
    const IntPolynomial h = h_polynomial(f_vector(data.fixed.complex), data.fixed.delta);
    data.graded = h * data.q_poly;
    data.ungraded = data.graded(1);

    if (data.ungraded != Int(facet_count(data.fixed.complex)) * data.q_poly(1))
        throw InvariantViolation("character_data: ungraded value mismatch");
    if (data.graded.degree() != static_cast<long>(fan.dim) || data.graded.coeff(0) != 1)
        throw InvariantViolation("character_data: graded character degree or constant term");
    return data;
}

inline std::map<long, CharacterData> character_table(const Fan& fan, const GroupAction& action) {
    std::map<long, CharacterData> table;
    for (long j : divisors(action.order)) table.emplace(j, character_data(fan, action, j));
    return table;
}

struct GradedDecomposition {
    std::vector<Decomposition> per_degree;  // index = degree, 0..dim
    bool all_permutation = true;
};

// Decompose the coefficient character of every degree.  The degree-i values
// are the q^i coefficients of the graded characters.
inline GradedDecomposition decompose_graded(const Fan& fan, const GroupAction& action) {
    const auto table = character_table(fan, action);
    GradedDecomposition g;
    for (std::size_t deg = 0; deg <= fan.dim; ++deg) {
        std::map<long, Int> values;
        for (const auto& [j, data] : table) values[j] = data.graded.coeff(deg);
        g.per_degree.push_back(decompose(values, action.order));
        if (g.per_degree.back().verdict != Verdict::Permutation) g.all_permutation = false;
    }
    return g;
}

// For prime power order p^r the subgroup lattice is a chain, and the graded
// permutation property is equivalent to the coefficientwise monotonicity of
// chi[q] along the chain.  Both routes are computed and must agree.
struct PrimePowerCheck {
    long p = 0;
    long r = 0;
    bool differences_nonnegative = true;
    bool graded_all_permutation = true;
    bool pass = false;
};

inline PrimePowerCheck prime_power_check(const Fan& fan, const GroupAction& action) {
    const auto [p, r] = prime_power_split(action.order);
    if (p == 0)
        throw NotPrimePower("order " + std::to_string(action.order) + " is not a prime power");

    PrimePowerCheck check;
    check.p = p;
    check.r = r;
    long pi = 1;
    for (long i = 1; i < r; ++i) {
        pi *= p;
        const IntPolynomial diff =
            graded_character(fan, action, pi) - graded_character(fan, action, pi / p);
        if (!diff.has_nonnegative_coefficients()) check.differences_nonnegative = false;
    }
    check.graded_all_permutation = decompose_graded(fan, action).all_permutation;
    if (check.differences_nonnegative != check.graded_all_permutation)
        throw InvariantViolation("prime_power_check: the two criteria disagree");
    check.pass = check.differences_nonnegative && check.graded_all_permutation;
    return check;
}

// ---------------------------------------------------------------------------
// Q-polynomials of powers from the base factorization
//
// With Q_c = prod_{k | n, k != 1} Phi_k^{a_k}, raising c to the l-th power
// sends a primitive k-th root of unity to a primitive (k/(k,l))-th one, so
//   Q_{c^l} = prod_{k | n, k not| l} Phi_{k/(k,l)}^{a_k * d(k,l)},
// where d(k,l) = deg Phi_k / deg Phi_{k/(k,l)} accounts for multiplicities.
// ---------------------------------------------------------------------------

inline IntPolynomial q_power_from_base(const CyclotomicFactorization& qc, long n, long l) {
    if (l < 1 || n % l != 0)
        throw InvariantViolation("q_power_from_base: l must divide n");
    IntPolynomial result = IntPolynomial::one();
    for (long k : divisors(n)) {
        if (k == 1 || l % k == 0) continue;  // k | l contributes eigenvalue 1
        const long a = qc.exponent(k);
        if (a == 0) continue;
        const long target = k / std::gcd(k, l);
        const long mult = a * cyclotomic_degree_ratio(k, target);
        result = result * cyclotomic(target).pow(mult);
    }
    return result;
}

// Exponent of the prime p in Q_{c^l}(1): only cyclotomics of prime power
// index contribute at q = 1, giving
//   b(p,l,n) = sum_{i = M(p,l)+1}^{M(p,n)} sum_{s | l / p^M(p,l)}
//              a_{p^i s} * (deg Phi_{p^i s} / deg Phi_{p^{i - M(p,l)}}).
inline long b_exponent(long p, long l, long n, const CyclotomicFactorization& qc) {
    if (l < 1 || n % l != 0) throw InvariantViolation("b_exponent: l must divide n");
    const long M = p_adic_valuation(p, l);
    const long R = p_adic_valuation(p, n);
    if (M == R) return 0;
    const long l_odd = [&] {
        long v = l;
        while (v % p == 0) v /= p;
        return v;
    }();
    long b = 0;
    long pi = 1;
    for (long i = 1; i <= R; ++i) {
        pi *= p;
        if (i <= M) continue;
        long pim = pi;  // p^{i - M}
        for (long t = 0; t < M; ++t) pim /= p;
        for (long s : divisors(l_odd)) {
            const long a = qc.exponent(pi * s);
            if (a == 0) continue;
            b += a * cyclotomic_degree_ratio(pi * s, pim);
        }
    }
    return b;
}

// Prime exponents relating a character value to the value on the quotient by
// <c^l>: for a | l with a = p^r k (p not dividing k) and M = M(p,l),
//   b^l(p,a,n) = sum_{i=M+1}^{M(p,n)} a_{p^i a} * (deg Phi_{p^i a} / deg Phi_{p^i})
// when r = 0, and
//   b^l(p,a,n) = sum_{i=M+1}^{M(p,n)} (p-1) a_{p^i k}
//                * (deg Phi_{p^i k} / deg Phi_{p^{i-r+1}})
// otherwise; zero when M(p,l) = M(p,n).
inline long b_l_exponent(long p, long a, long l, long n, const CyclotomicFactorization& qc) {
    if (l < 1 || n % l != 0) throw InvariantViolation("b_l_exponent: l must divide n");
    if (a < 1 || l % a != 0) throw InvariantViolation("b_l_exponent: a must divide l");
    const long M = p_adic_valuation(p, l);
    const long R = p_adic_valuation(p, n);
    if (M == R) return 0;
    const long r = p_adic_valuation(p, a);
    long k = a;
    while (k % p == 0) k /= p;

    long b = 0;
    long pi = 1;
    for (long i = 1; i <= R; ++i) {
        pi *= p;
        if (i <= M) continue;
        const long ak = qc.exponent(pi * k);
        if (ak == 0) continue;
        if (r == 0) {
            b += ak * cyclotomic_degree_ratio(pi * k, pi);
        } else {
            long pt = 1;  // p^{i - r + 1}
            for (long t = 0; t < i - r + 1; ++t) pt *= p;
            b += (p - 1) * ak * cyclotomic_degree_ratio(pi * k, pt);
        }
    }
    return b;
}

// C^l(a) = prod_p p^{b^l(p,a,n)}; empty products are 1.
inline Int c_l_value(long a, long l, long n, const CyclotomicFactorization& qc) {
    Int value = 1;
    for (long p : prime_factors(n)) value *= int_pow(Int(p), b_l_exponent(p, a, l, n, qc));
    return value;
}

// ---------------------------------------------------------------------------
// quotient instance characters and cross checks
// ---------------------------------------------------------------------------

// Character data of the instance restricted to the fixed subspace of c^l.
// The quotient group has order l but may act with a kernel; the table is
// indexed by divisors of the faithful order of the restricted generator, and
// values at arbitrary class representatives are read off via the gcd.
struct QuotientCharacter {
    RestrictedInstance instance;
    std::map<long, CharacterData> table;

    long faithful_order() const { return instance.action.order; }

    const CharacterData& at_class(long j) const {
        long m = std::gcd(j, faithful_order());
        return table.at(m == 0 ? faithful_order() : m);
    }

    IntPolynomial graded_at(long j) const { return at_class(j).graded; }
    Int ungraded_at(long j) const { return at_class(j).ungraded; }
};

inline QuotientCharacter quotient_character(const Fan& fan, const GroupAction& action, long l) {
    QuotientCharacter q;
    q.instance = restrict_to_fixed(fan, action, l);
    q.table = character_table(q.instance.fan, q.instance.action);
    return q;
}

// Verification of the two quotient identities for every j | l:
//   chi[q](c^j)  = chi^l[q](class of c^j) * prod_{k | n, k not| l, k not| j}
//                     Phi_{k/(k,j)}^{a_k d(k,j)}
//   chi_u(c^j)   = chi_u^l(class of c^j) * prod_{a | j} C^l(a)
// Failures are report entries; both identities hold for every valid instance.
struct QuotientCheckEntry {
    long l = 1;
    long j = 1;
    bool graded_ok = false;
    bool ungraded_ok = false;
};

inline std::vector<QuotientCheckEntry> cross_check_quotient(const Fan& fan,
                                                            const GroupAction& action, long l) {
    const long n = action.order;
    if (l < 1 || n % l != 0)
        throw InvariantViolation("cross_check_quotient: l must divide the order");

    const CyclotomicFactorization qc = factor_into_cyclotomics(q_polynomial(action, 1), n);
    const QuotientCharacter quotient = quotient_character(fan, action, l);

    std::vector<QuotientCheckEntry> entries;
    for (long j : divisors(l)) {
        QuotientCheckEntry e;
        e.l = l;
        e.j = j;

        IntPolynomial rhs = quotient.graded_at(j);
        for (long k : divisors(n)) {
            if (k == 1 || l % k == 0 || j % k == 0) continue;
            const long a = qc.exponent(k);
            if (a == 0) continue;
            const long target = k / std::gcd(k, j);
            rhs = rhs * cyclotomic(target).pow(a * cyclotomic_degree_ratio(k, target));
        }
        e.graded_ok = (graded_character(fan, action, j) == rhs);

        Int u_rhs = quotient.ungraded_at(j);
        for (long a : divisors(j)) u_rhs *= c_l_value(a, l, n, qc);
        const FixedData fixed = fixed_subcomplex(fan, action, j);
        const Int u_lhs = Int(facet_count(fixed.complex)) * q_polynomial(action, j)(1);
        e.ungraded_ok = (u_lhs == u_rhs);

        entries.push_back(e);
    }
    return entries;
}

// ---------------------------------------------------------------------------
// weighted poset positivity
//
// For a finite bounded poset P, f' with all upper sums non-negative, and a
// positive integer weight map C, the sum of f(p) = f'(p) * prod_{q <= p} C(q)
// is non-negative.  Elements here are positive integers ordered by
// divisibility.
// ---------------------------------------------------------------------------

struct PosetCheckResult {
    Int value = 0;
    bool hypothesis_ok = true;
};

inline PosetCheckResult poset_weighted_check(const std::vector<long>& elements,
                                             const std::map<long, Int>& fprime,
                                             const std::map<long, Int>& cmap) {
    if (elements.empty()) throw UnboundedPoset("empty poset");
    for (long e : elements) {
        if (e < 1) throw InvariantViolation("poset elements must be positive integers");
        if (!fprime.count(e) || !cmap.count(e))
            throw InvariantViolation("poset maps must cover every element");
        if (cmap.at(e) < 1) throw InvariantViolation("cmap must take positive values");
    }

    bool has_bottom = false, has_top = false;
    for (long b : elements) {
        if (std::all_of(elements.begin(), elements.end(), [&](long e) { return e % b == 0; }))
            has_bottom = true;
        if (std::all_of(elements.begin(), elements.end(), [&](long e) { return b % e == 0; }))
            has_top = true;
    }
    if (!has_bottom || !has_top)
        throw UnboundedPoset("divisor poset lacks a least or greatest element");

    PosetCheckResult result;
    for (long p : elements) {
        Int upper = 0;
        for (long q : elements)
            if (q % p == 0) upper += fprime.at(q);
        if (upper < 0) result.hypothesis_ok = false;

        Int weight = 1;
        for (long q : elements)
            if (p % q == 0) weight *= cmap.at(q);
        result.value += fprime.at(p) * weight;
    }
    return result;
}

}  // namespace fanchar
