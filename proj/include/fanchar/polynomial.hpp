#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fanchar/errors.hpp"
#include "fanchar/numeric.hpp"

namespace fanchar {

// Univariate polynomial with arbitrary-precision integer coefficients.
// coefficient index = degree of the term; the zero polynomial stores nothing.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {
        normalize();
    }

    static IntPolynomial constant(Int c) {
        IntPolynomial p;
        p.coeffs_.push_back(std::move(c));
        p.normalize();
        return p;
    }

    static IntPolynomial one() { return constant(1); }

    // c * q^deg
    static IntPolynomial monomial(Int c, std::size_t deg) {
        IntPolynomial p;
        p.coeffs_.assign(deg + 1, Int(0));
        p.coeffs_[deg] = std::move(c);
        p.normalize();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of q^i; zero beyond the stored degree.
    const Int& coeff(std::size_t i) const {
        static const Int zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    Int operator()(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntPolynomial();
        std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const Int& c) const {
        std::vector<Int> r = coeffs_;
        for (auto& x : r) x *= c;
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-() const { return *this * Int(-1); }

    IntPolynomial pow(long e) const {
        if (e < 0) throw InvariantViolation("IntPolynomial::pow: negative exponent");
        IntPolynomial acc = one();
        IntPolynomial base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool has_nonnegative_coefficients() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    // Human-readable form, e.g. "1 - q + q^2".
    std::string str(const char* var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Int& c = coeffs_[i];
            if (c == 0) continue;
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline IntPolynomial operator*(const Int& c, const IntPolynomial& p) { return p * c; }

// q^m - 1
inline IntPolynomial q_power_minus_one(long m) {
    if (m <= 0) throw InvariantViolation("q_power_minus_one: m must be positive");
    std::vector<Int> c(static_cast<std::size_t>(m) + 1, Int(0));
    c[0] = -1;
    c[static_cast<std::size_t>(m)] = 1;
    return IntPolynomial(std::move(c));
}

// 1 - q
inline IntPolynomial one_minus_q() { return IntPolynomial{Int(1), Int(-1)}; }

// Exact division over the integers: returns quotient with den * quotient = num.
// Throws InexactDivision if no such integer-coefficient quotient exists.
inline IntPolynomial poly_exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw InvariantViolation("poly_exact_divide: zero divisor");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree() < den.degree())
        throw InexactDivision("degree of numerator below degree of denominator");

    std::vector<Int> rem(num.coefficients());
    const auto& d = den.coefficients();
    const Int& lead = d.back();
    const std::size_t dq = static_cast<std::size_t>(num.degree() - den.degree());
    std::vector<Int> quot(dq + 1, Int(0));

    for (std::size_t shift = dq + 1; shift-- > 0;) {
        Int& top = rem[shift + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw InexactDivision("leading coefficient " + to_string(top) +
                                  " not divisible by " + to_string(lead));
        Int q = top / lead;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= q * d[i];
        quot[shift] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw InexactDivision("nonzero remainder");
    return IntPolynomial(std::move(quot));
}

// True when den divides num exactly over the integers.
inline bool poly_divides(const IntPolynomial& den, const IntPolynomial& num,
                         IntPolynomial* quotient = nullptr) {
    try {
        IntPolynomial q = poly_exact_divide(num, den);
        if (quotient) *quotient = std::move(q);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

}  // namespace fanchar
