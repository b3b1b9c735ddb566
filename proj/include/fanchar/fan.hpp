#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanchar/errors.hpp"
#include "fanchar/matrix.hpp"
#include "fanchar/number_theory.hpp"
#include "fanchar/numeric.hpp"
#include "fanchar/simplicial_complex.hpp"

namespace fanchar {

// Complete simplicial fan: primitive integer rays and full-dimensional
// simplicial maximal cones given as ray index sets.
struct Fan {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<std::size_t>> maximal_cones;

    bool operator==(const Fan& o) const {
        return dim == o.dim && rays == o.rays && maximal_cones == o.maximal_cones;
    }
};

enum class ValidationLevel { Basic, Geometric };

struct ValidationReport {
    ValidationLevel requested = ValidationLevel::Basic;
    // What was actually verified; geometric tiling is only decidable here
    // for dim <= 3, so the achieved level may fall back to Basic.
    ValidationLevel achieved = ValidationLevel::Basic;
    std::vector<std::string> checks_passed;
    bool h_symmetric = true;  // heuristic flag, never fatal
};

inline const char* validation_level_name(ValidationLevel v) {
    return v == ValidationLevel::Basic ? "basic" : "geometric";
}

// The associated complex: facets are the maximal cones re-read as vertex sets
// over the rays.
inline SimplicialComplex complex_from_fan(const Fan& fan) {
    std::vector<Face> faces;
    faces.reserve(fan.maximal_cones.size());
    for (const auto& cone : fan.maximal_cones) faces.push_back(cone);
    SimplicialComplex c = make_complex(std::move(faces));
    c.vertex_count = fan.rays.size();
    return c;
}

namespace detail {

// Euler characteristic of the boundary sphere S^{d-1}.
inline long sphere_euler(std::size_t d) {
    return d % 2 == 1 ? 2 : 0;
}

inline std::vector<Int> cross3(const std::vector<Int>& a, const std::vector<Int>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<Int> negate(std::vector<Int> v) {
    for (auto& x : v) x = -x;
    return v;
}

// Inward facet normals of a full-dimensional simplicial cone, d in {2, 3}.
// The cone is exactly { x : n . x >= 0 for each normal n }.
inline std::vector<std::vector<Int>> cone_normals(const Fan& fan,
                                                  const std::vector<std::size_t>& cone) {
    std::vector<std::vector<Int>> normals;
    if (fan.dim == 2) {
        const auto& u = fan.rays[cone[0]];
        const auto& v = fan.rays[cone[1]];
        std::vector<Int> pu{-u[1], u[0]};
        if (dot(pu, v) < 0) pu = negate(pu);
        std::vector<Int> pv{-v[1], v[0]};
        if (dot(pv, u) < 0) pv = negate(pv);
        normals = {pu, pv};
    } else if (fan.dim == 3) {
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& a = fan.rays[cone[(k + 1) % 3]];
            const auto& b = fan.rays[cone[(k + 2) % 3]];
            const auto& opposite = fan.rays[cone[k]];
            std::vector<Int> n = cross3(a, b);
            if (dot(n, opposite) < 0) n = negate(n);
            normals.push_back(std::move(n));
        }
    }
    return normals;
}

inline bool satisfies_all(const std::vector<Int>& x,
                          const std::vector<std::vector<Int>>& normals) {
    for (const auto& n : normals)
        if (dot(n, x) < 0) return false;
    return true;
}

// Do the interiors of two distinct full-dimensional cones intersect?
// Equivalent, for closed full-dimensional convex cones, to their intersection
// having full dimension.  Candidate extreme rays of the intersection are the
// generators of either cone plus, in d = 3, directions cut out by pairs of
// facet planes; the intersection is full-dimensional iff d of the surviving
// candidates are linearly independent.
inline bool cone_interiors_intersect(const Fan& fan, const std::vector<std::size_t>& c1,
                                     const std::vector<std::size_t>& c2) {
    const std::size_t d = fan.dim;
    if (d == 1) return fan.rays[c1[0]] == fan.rays[c2[0]];

    auto n1 = cone_normals(fan, c1);
    auto n2 = cone_normals(fan, c2);

    std::vector<std::vector<Int>> candidates;
    for (std::size_t i : c1) candidates.push_back(fan.rays[i]);
    for (std::size_t i : c2) candidates.push_back(fan.rays[i]);
    if (d == 3) {
        std::vector<std::vector<Int>> planes = n1;
        planes.insert(planes.end(), n2.begin(), n2.end());
        for (std::size_t i = 0; i < planes.size(); ++i)
            for (std::size_t j = i + 1; j < planes.size(); ++j) {
                auto dir = cross3(planes[i], planes[j]);
                if (dir == std::vector<Int>{0, 0, 0}) continue;
                candidates.push_back(dir);
                candidates.push_back(negate(dir));
            }
    }

    std::vector<std::vector<Int>> kept;
    for (const auto& x : candidates)
        if (satisfies_all(x, n1) && satisfies_all(x, n2)) kept.push_back(x);
    return kept.size() >= d && matrix_rank(kept) == d;
}

}  // namespace detail

// Structural and combinatorial validation of a complete simplicial fan.
// Basic level: primitivity, distinctness, ray usage, simpliciality (exact
// rank), the pseudo-manifold condition, facet-adjacency connectivity, and the
// Euler characteristic of the boundary sphere.  Geometric level additionally
// certifies, for dim <= 3, that maximal cone interiors are pairwise disjoint.
// Throws FanInvalid with a machine-readable reason on the first failure.
inline ValidationReport validate_fan(const Fan& fan,
                                     ValidationLevel level = ValidationLevel::Basic) {
    ValidationReport report;
    report.requested = level;

    const std::size_t d = fan.dim;

    // structural shape
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (fan.rays[i].size() != d)
            throw FanInvalid("RayDimension",
                             "ray " + std::to_string(i) + " has wrong length");
    for (const auto& cone : fan.maximal_cones)
        for (std::size_t idx : cone)
            if (idx >= fan.rays.size())
                throw FanInvalid("IndexOutOfRange", "cone index " + std::to_string(idx) +
                                                        " with " + std::to_string(fan.rays.size()) +
                                                        " rays");
    if (fan.maximal_cones.empty())
        throw FanInvalid("NoCones", "fan has no maximal cones");

    if (d == 0) {
        // the fan of a point: no rays, the zero cone only
        if (!fan.rays.empty() || fan.maximal_cones != std::vector<std::vector<std::size_t>>{{}})
            throw FanInvalid("ZeroDimensional",
                             "a 0-dimensional fan must have no rays and a single empty cone");
        report.checks_passed = {"structure"};
        report.achieved = level;
        return report;
    }

    // ray primitivity and distinctness
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        Int g = 0;
        for (const auto& x : fan.rays[i]) g = int_gcd(g, x);
        if (g != 1)
            throw FanInvalid("NonPrimitiveRay", "ray " + std::to_string(i) +
                                                    " has coordinate gcd " + to_string(g));
    }
    {
        auto sorted = fan.rays;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw FanInvalid("DuplicateRay", "two rays coincide");
    }
    report.checks_passed.push_back("rays");

    // simpliciality: every maximal cone has d distinct rays of full rank
    std::set<std::vector<std::size_t>> cone_set;
    for (std::size_t ci = 0; ci < fan.maximal_cones.size(); ++ci) {
        auto cone = fan.maximal_cones[ci];
        std::sort(cone.begin(), cone.end());
        if (cone.size() != d || std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            throw FanInvalid("ConeSize", "maximal cone " + std::to_string(ci) +
                                             " does not have " + std::to_string(d) +
                                             " distinct rays");
        if (!cone_set.insert(cone).second)
            throw FanInvalid("DuplicateCone", "maximal cone " + std::to_string(ci) + " repeats");
        std::vector<std::vector<Int>> rows;
        for (std::size_t idx : cone) rows.push_back(fan.rays[idx]);
        if (matrix_rank(rows) != d)
            throw FanInvalid("ConeRank", "maximal cone " + std::to_string(ci) +
                                             " spans less than the ambient dimension");
    }
    report.checks_passed.push_back("simplicial");

    // every ray appears in some cone
    {
        std::vector<bool> used(fan.rays.size(), false);
        for (const auto& cone : fan.maximal_cones)
            for (std::size_t idx : cone) used[idx] = true;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (!used[i])
                throw FanInvalid("UnusedRay",
                                 "ray " + std::to_string(i) + " lies in no maximal cone");
    }

    const SimplicialComplex complex = complex_from_fan(fan);

    // pseudo-manifold: each (d-1)-subset of a facet lies in exactly two facets
    {
        std::map<Face, int> ridge_count;
        for (const auto& facet : complex.facets)
            for (std::size_t drop = 0; drop < facet.size(); ++drop) {
                Face ridge;
                for (std::size_t i = 0; i < facet.size(); ++i)
                    if (i != drop) ridge.push_back(facet[i]);
                ++ridge_count[ridge];
            }
        for (const auto& [ridge, count] : ridge_count)
            if (count != 2)
                throw FanInvalid("PseudoManifold", "face " + face_str(ridge) + " lies in " +
                                                       std::to_string(count) +
                                                       " facets instead of 2");
    }
    report.checks_passed.push_back("pseudo-manifold");

    // facet adjacency graph connected
    {
        const std::size_t fc = complex.facets.size();
        std::vector<bool> seen(fc, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t other = 0; other < fc; ++other) {
                if (seen[other]) continue;
                Face inter;
                std::set_intersection(complex.facets[cur].begin(), complex.facets[cur].end(),
                                      complex.facets[other].begin(), complex.facets[other].end(),
                                      std::back_inserter(inter));
                if (inter.size() + 1 == d) {
                    seen[other] = true;
                    stack.push_back(other);
                }
            }
        }
        for (std::size_t i = 0; i < fc; ++i)
            if (!seen[i])
                throw FanInvalid("Disconnected", "facet " + face_str(complex.facets[i]) +
                                                     " is not reachable through shared ridges");
    }
    report.checks_passed.push_back("connected");

    // Euler characteristic of the boundary sphere
    {
        const FVector fv = f_vector(complex);
        Int chi = 0;
        for (std::size_t i = 1; i < fv.counts.size(); ++i)
            chi += (i % 2 == 1) ? fv.counts[i] : Int(-fv.counts[i]);
        if (chi != detail::sphere_euler(d))
            throw FanInvalid("EulerCharacteristic",
                             "Euler characteristic " + to_string(chi) + " differs from " +
                                 std::to_string(detail::sphere_euler(d)));
        report.checks_passed.push_back("euler");

        report.h_symmetric = h_symmetric(h_polynomial(fv, d), d);
    }

    if (level == ValidationLevel::Geometric) {
        if (d <= 3) {
            for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i)
                for (std::size_t j = i + 1; j < fan.maximal_cones.size(); ++j)
                    if (detail::cone_interiors_intersect(fan, fan.maximal_cones[i],
                                                         fan.maximal_cones[j]))
                        throw FanInvalid("OverlappingCones",
                                         "interiors of maximal cones " + std::to_string(i) +
                                             " and " + std::to_string(j) + " intersect");
            report.checks_passed.push_back("tiling");
            report.achieved = ValidationLevel::Geometric;
        } else {
            report.achieved = ValidationLevel::Basic;  // tiling undecided for dim > 3
        }
    } else {
        report.achieved = ValidationLevel::Basic;
    }
    return report;
}

}  // namespace fanchar
