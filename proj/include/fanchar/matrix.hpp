#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fanchar/errors.hpp"
#include "fanchar/numeric.hpp"
#include "fanchar/polynomial.hpp"

namespace fanchar {

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : dim_(0) {}

    explicit IntMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, Int(0)) {}

    explicit IntMatrix(const std::vector<std::vector<Int>>& rows) {
        dim_ = rows.size();
        e_.reserve(dim_ * dim_);
        for (const auto& r : rows) {
            if (r.size() != dim_)
                throw DimensionMismatch("matrix rows must all have length equal to the row count");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t dim) {
        IntMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_identity() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("matrix product dimension mismatch");
        IntMatrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < dim_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch("matrix difference dimension mismatch");
        IntMatrix r(dim_);
        for (std::size_t i = 0; i < dim_ * dim_; ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != dim_) throw DimensionMismatch("matrix-vector dimension mismatch");
        std::vector<Int> r(dim_, Int(0));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    IntMatrix power(long e) const {
        if (e < 0) throw InvariantViolation("IntMatrix::power: negative exponent");
        IntMatrix acc = identity(dim_);
        IntMatrix base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < dim_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t dim_;
    std::vector<Int> e_;
};

namespace detail {

// Fraction-free (Bareiss) elimination on a copy; returns (rank, det_of_leading)
// where det is meaningful only for square full-rank input.  All divisions are
// exact: intermediate entries are minors of the original matrix.
inline std::pair<std::size_t, Int> bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    Int det = (r == rows && rows == cols) ? Int(sign * prev) : Int(0);
    return {r, det};
}

inline std::vector<std::vector<Int>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(m.dim(), std::vector<Int>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace detail

inline std::size_t matrix_rank(const std::vector<std::vector<Int>>& rows) {
    return detail::bareiss(rows).first;
}

inline std::size_t matrix_rank(const IntMatrix& m) {
    return detail::bareiss(detail::to_rows(m)).first;
}

inline Int determinant(const IntMatrix& m) {
    if (m.dim() == 0) return 1;  // det of the empty matrix
    return detail::bareiss(detail::to_rows(m)).second;
}

// Exact characteristic data of 1 - q*g: the reversal of det(t*I - g),
// computed by the Faddeev-LeVerrier recurrence (all divisions exact over Z).
// Result has constant term 1 and degree <= dim.
inline IntPolynomial char_poly_one_minus_qg(const IntMatrix& g) {
    const std::size_t d = g.dim();
    // Coefficients of det(t*I - g) = t^d + c[d-1] t^{d-1} + ... + c[0].
    std::vector<Int> c(d + 1, Int(0));
    c[d] = 1;
    IntMatrix n = g;
    for (std::size_t k = 1; k <= d; ++k) {
        Int tr = 0;
        for (std::size_t i = 0; i < d; ++i) tr += n(i, i);
        c[d - k] = exact_div(-tr, Int(k));
        if (k == d) break;
        IntMatrix shifted = n;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) += c[d - k];
        n = g * shifted;
    }
    // det(1 - q g) = sum_j c[d - j] q^j.
    std::vector<Int> rev(d + 1);
    for (std::size_t j = 0; j <= d; ++j) rev[j] = c[d - j];
    IntPolynomial p(std::move(rev));
    if (p.coeff(0) != 1)
        throw InvariantViolation("char_poly_one_minus_qg: constant term is not 1");
    return p;
}

// Smallest n >= 1 with g^n = identity; throws OrderExceedsCap when no power
// up to cap works (infinite order, or cap too small).
inline long matrix_order(const IntMatrix& g, long cap = 10000) {
    if (cap < 1) throw InvariantViolation("matrix_order: cap must be positive");
    IntMatrix p = g;
    for (long n = 1; n <= cap; ++n) {
        if (p.is_identity()) return n;
        p = p * g;
    }
    throw OrderExceedsCap("no power up to " + std::to_string(cap) + " is the identity");
}

// dim of the eigenspace of 1: d - rank(g - identity).
inline std::size_t fixed_subspace_dimension(const IntMatrix& g) {
    return g.dim() - matrix_rank(g - IntMatrix::identity(g.dim()));
}

// Basis of the saturated integer kernel {v : m v = 0}, via unimodular column
// reduction: columns of the transform matching zero columns of the echelon
// form.  Each basis vector is part of a Z-basis of Z^d, so the kernel lattice
// is saturated and the vectors are primitive.
inline std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m) {
    const std::size_t d = m.dim();
    auto a = detail::to_rows(m);
    auto v = detail::to_rows(IntMatrix::identity(d));

    auto col_combine = [&](std::size_t c1, std::size_t c2, const Int& x, const Int& y,
                           const Int& z, const Int& w) {
        // (col c1, col c2) <- (x*c1 + y*c2, z*c1 + w*c2); x*w - y*z = +-1
        for (std::size_t i = 0; i < d; ++i) {
            Int n1 = x * a[i][c1] + y * a[i][c2];
            Int n2 = z * a[i][c1] + w * a[i][c2];
            a[i][c1] = std::move(n1);
            a[i][c2] = std::move(n2);
        }
        for (std::size_t i = 0; i < d; ++i) {
            Int n1 = x * v[i][c1] + y * v[i][c2];
            Int n2 = z * v[i][c1] + w * v[i][c2];
            v[i][c1] = std::move(n1);
            v[i][c2] = std::move(n2);
        }
    };
    auto col_swap = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < d; ++i) std::swap(a[i][c1], a[i][c2]);
        for (std::size_t i = 0; i < d; ++i) std::swap(v[i][c1], v[i][c2]);
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < d && lead < d; ++r) {
        std::size_t c = lead;
        while (c < d && a[r][c] == 0) ++c;
        if (c == d) continue;
        if (c != lead) col_swap(c, lead);
        for (c = lead + 1; c < d; ++c) {
            if (a[r][c] == 0) continue;
            // extended gcd column operation zeroing a[r][c]
            Int p = a[r][lead], q = a[r][c];
            Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
            while (q != 0) {
                Int t = p / q;
                Int r2 = p - t * q;
                Int nx = x0 - t * x1, ny = y0 - t * y1;
                p = q; q = r2;
                x0 = x1; y0 = y1;
                x1 = nx; y1 = ny;
            }
            // p = gcd = x0*a[r][lead] + y0*a[r][c]
            Int u = exact_div(a[r][lead], p), w = exact_div(a[r][c], p);
            col_combine(lead, c, x0, y0, -w, u);
        }
        ++lead;
    }

    std::vector<std::vector<Int>> basis;
    for (std::size_t c = lead; c < d; ++c) {
        std::vector<Int> vec(d);
        for (std::size_t i = 0; i < d; ++i) vec[i] = v[i][c];
        // normalize sign: first nonzero entry positive, for determinism
        for (const auto& x : vec) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : vec) y = -y;
            break;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

// Nonzero invariant factors d1 | d2 | ... of an integer matrix (any shape).
inline std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> factors;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero entry of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int a = m[i][j] < 0 ? Int(-m[i][j]) : m[i][j];
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[pi], m[t]);
        for (std::size_t i = t; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[i], m[t]);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    dirty = true;
                }
            }
            if (!dirty) {
                // pivot must divide every entry of the trailing block
                for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                    for (std::size_t j = t + 1; j < cols && !dirty; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                            dirty = true;
                        }
            }
        }
        factors.push_back(m[t][t] < 0 ? Int(-m[t][t]) : m[t][t]);
        ++t;
    }
    return factors;
}

// Exact rational solve of (basis as columns) * x = v; requires the solution to
// be integral, which holds whenever the basis spans a saturated sublattice
// containing v.  Throws InvariantViolation otherwise.
inline std::vector<Int> coordinates_in_basis(const std::vector<std::vector<Int>>& basis,
                                             const std::vector<Int>& v) {
    const std::size_t d = v.size();
    const std::size_t k = basis.size();
    for (const auto& b : basis)
        if (b.size() != d) throw DimensionMismatch("basis vector length mismatch");

    // Gaussian elimination over Q on the augmented system.
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][k] = Rat(v[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && row < d; ++c) {
        std::size_t piv = row;
        while (piv < d && m[piv][c] == 0) ++piv;
        if (piv == d) continue;
        std::swap(m[piv], m[row]);
        Rat inv = m[row][c];
        for (std::size_t j = c; j <= k; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < d; ++i)
        if (m[i][k] != 0)
            throw InvariantViolation("coordinates_in_basis: vector outside basis span");
    if (pivot_col.size() != k)
        throw InvariantViolation("coordinates_in_basis: basis is linearly dependent");

    std::vector<Int> x(k);
    for (std::size_t r = 0; r < k; ++r) {
        const Rat& val = m[r][k];
        if (!is_integer(val))
            throw InvariantViolation("coordinates_in_basis: non-integral coordinate " +
                                     to_string(val));
        x[pivot_col[r]] = boost::multiprecision::numerator(val);
    }
    return x;
}

}  // namespace fanchar
