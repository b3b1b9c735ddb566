#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanchar/errors.hpp"
#include "fanchar/numeric.hpp"
#include "fanchar/polynomial.hpp"

namespace fanchar {

using Face = std::vector<std::size_t>;  // sorted vertex indices

// Simplicial complex given by its facets; faces are all subsets of facets and
// are stored implicitly.  The empty complex {*} is the value with a single
// empty facet: it has exactly one face (the empty face) and facet count 1.
struct SimplicialComplex {
    std::size_t vertex_count = 0;
    std::vector<Face> facets;  // sorted faces, sorted lexicographically, mutually incomparable

    bool operator==(const SimplicialComplex& o) const {
        return vertex_count == o.vertex_count && facets == o.facets;
    }
};

inline std::string face_str(const Face& f) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "}";
    return os.str();
}

inline bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Build a complex from a list of candidate faces: sorts, deduplicates, and
// keeps only the maximal ones.  An empty candidate list yields {*}.
inline SimplicialComplex make_complex(std::vector<Face> candidates) {
    for (auto& f : candidates) std::sort(f.begin(), f.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    SimplicialComplex c;
    for (const auto& f : candidates) {
        bool maximal = true;
        for (const auto& g : candidates)
            if (&f != &g && f.size() < g.size() && face_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) c.facets.push_back(f);
    }
    if (c.facets.empty()) c.facets.push_back({});

    std::set<std::size_t> verts;
    for (const auto& f : c.facets) verts.insert(f.begin(), f.end());
    c.vertex_count = verts.size();
    return c;
}

// Every face of the complex, the empty face included, sorted.
inline std::vector<Face> all_faces(const SimplicialComplex& c) {
    std::set<Face> faces;
    for (const auto& facet : c.facets) {
        const std::size_t k = facet.size();
        if (k > 24)
            throw InvariantViolation("face enumeration limited to facets of at most 24 vertices");
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Face f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i)) f.push_back(facet[i]);
            faces.insert(std::move(f));
        }
    }
    return {faces.begin(), faces.end()};
}

// Face counts by cardinality: counts[0] = 1 for the empty face, counts[k] the
// number of faces with k vertices.
struct FVector {
    std::vector<Int> counts;

    bool operator==(const FVector& o) const { return counts == o.counts; }
};

inline FVector f_vector(const SimplicialComplex& c) {
    std::size_t top = 0;
    for (const auto& f : c.facets) top = std::max(top, f.size());
    FVector fv;
    fv.counts.assign(top + 1, Int(0));
    for (const auto& f : all_faces(c)) ++fv.counts[f.size()];
    return fv;
}

// h-polynomial from the f-vector of a pure (d-1)-dimensional complex:
//   h_k = sum_{i=0..k} (-1)^{k-i} binomial(d-i, k-i) f_{i-1},
// with f_{i-1} read as counts[i].
inline IntPolynomial h_polynomial(const FVector& f, std::size_t d) {
    if (f.counts.size() > d + 1)
        throw InvariantViolation("h_polynomial: f-vector longer than facet dimension allows");
    std::vector<Int> h(d + 1, Int(0));
    for (std::size_t k = 0; k <= d; ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            Int term = binomial(static_cast<long>(d - i), static_cast<long>(k - i)) *
                       (i < f.counts.size() ? f.counts[i] : Int(0));
            if ((k - i) % 2 == 0)
                h[k] += term;
            else
                h[k] -= term;
        }
    return IntPolynomial(std::move(h));
}

inline std::size_t facet_count(const SimplicialComplex& c) {
    return c.facets.size();
}

// Dehn-Sommerville style palindromy h_k = h_{d-k}; holds for sphere
// triangulations, used as a heuristic validation flag.
inline bool h_symmetric(const IntPolynomial& h, std::size_t d) {
    for (std::size_t k = 0; k <= d; ++k)
        if (h.coeff(k) != h.coeff(d - k)) return false;
    return true;
}

}  // namespace fanchar
