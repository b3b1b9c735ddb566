#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanchar/errors.hpp"
#include "fanchar/fan.hpp"
#include "fanchar/matrix.hpp"
#include "fanchar/simplicial_complex.hpp"

namespace fanchar {

// Verified cyclic action on a fan: a finite-order lattice automorphism whose
// induced permutation of the rays maps cones to cones, with every setwise
// fixed cone fixed pointwise.
struct GroupAction {
    IntMatrix generator;
    long order = 1;
    std::vector<std::size_t> ray_perm;  // generator sends ray i to ray ray_perm[i]
};

namespace detail {

inline std::vector<std::size_t> perm_power(const std::vector<std::size_t>& perm, long e) {
    std::vector<std::size_t> r(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) r[i] = i;
    for (long t = 0; t < e; ++t) {
        std::vector<std::size_t> nxt(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) nxt[i] = perm[r[i]];
        r = nxt;
    }
    return r;
}

inline Face apply_perm(const std::vector<std::size_t>& perm, const Face& f) {
    Face img;
    img.reserve(f.size());
    for (std::size_t i : f) img.push_back(perm[i]);
    std::sort(img.begin(), img.end());
    return img;
}

}  // namespace detail

// Validates the generator against the fan and returns the verified action.
// Checks, in order: dimensions, unimodularity, finite order (up to cap), the
// induced ray permutation, cone preservation, and properness of every power
// on every nonempty face.
inline GroupAction validate_action(const Fan& fan, const IntMatrix& generator,
                                   long cap = 10000) {
    if (generator.dim() != fan.dim)
        throw DimensionMismatch("generator is " + std::to_string(generator.dim()) + "x" +
                                std::to_string(generator.dim()) + " but the fan has dimension " +
                                std::to_string(fan.dim));

    Int det = determinant(generator);
    if (det != 1 && det != -1)
        throw NotUnimodular("generator determinant is " + to_string(det));

    GroupAction action;
    action.generator = generator;
    action.order = matrix_order(generator, cap);

    // induced ray permutation
    std::map<std::vector<Int>, std::size_t> ray_index;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) ray_index[fan.rays[i]] = i;
    action.ray_perm.resize(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        auto image = generator.apply(fan.rays[i]);
        auto it = ray_index.find(image);
        if (it == ray_index.end())
            throw NotFanAutomorphism("image of ray " + std::to_string(i) +
                                     " is not a ray of the fan");
        action.ray_perm[i] = it->second;
    }

    // cones map to cones
    std::set<Face> cone_set;
    for (auto cone : fan.maximal_cones) {
        std::sort(cone.begin(), cone.end());
        cone_set.insert(cone);
    }
    for (std::size_t ci = 0; ci < fan.maximal_cones.size(); ++ci) {
        Face image = detail::apply_perm(action.ray_perm, fan.maximal_cones[ci]);
        if (!cone_set.count(image))
            throw NotFanAutomorphism("image of maximal cone " + std::to_string(ci) +
                                     " is not a maximal cone");
    }

    // properness: a face fixed setwise by any power must be fixed pointwise
    const auto faces = all_faces(complex_from_fan(fan));
    std::vector<std::size_t> perm = action.ray_perm;
    for (long j = 1; j < action.order; ++j) {
        for (const auto& face : faces) {
            if (face.empty()) continue;
            if (detail::apply_perm(perm, face) != face) continue;
            for (std::size_t i : face)
                if (perm[i] != i)
                    throw NotProper(j, face_str(face),
                                    "power " + std::to_string(j) + " fixes face " +
                                        face_str(face) + " setwise but moves ray " +
                                        std::to_string(i));
        }
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = action.ray_perm[perm[i]];
    }
    return action;
}

// The subcomplex of faces fixed by generator^j, together with the dimension
// of the fixed subspace of generator^j.  Under a proper action a face is
// fixed setwise iff all of its vertices are fixed rays.
struct FixedData {
    long divisor = 1;
    SimplicialComplex complex;
    std::size_t delta = 0;
};

inline FixedData fixed_subcomplex(const Fan& fan, const GroupAction& action, long j) {
    if (j < 1 || action.order % j != 0)
        throw InvariantViolation("fixed_subcomplex: " + std::to_string(j) +
                                 " does not divide the order " + std::to_string(action.order));
    const auto perm = detail::perm_power(action.ray_perm, j);

    std::vector<Face> candidates;
    for (auto facet : fan.maximal_cones) {
        Face kept;
        for (std::size_t i : facet)
            if (perm[i] == i) kept.push_back(i);
        candidates.push_back(std::move(kept));
    }

    FixedData data;
    data.divisor = j;
    data.complex = make_complex(std::move(candidates));
    data.delta = fixed_subspace_dimension(action.generator.power(j));

    for (const auto& facet : data.complex.facets)
        if (facet.size() != data.delta)
            throw InvariantViolation(
                "fixed subcomplex of power " + std::to_string(j) + " has facet " +
                face_str(facet) + " of size " + std::to_string(facet.size()) +
                " but fixed subspace dimension " + std::to_string(data.delta) +
                "; the fan is not complete or the action is not proper");
    return data;
}

// A fan with a verified action on the fixed sublattice of generator^l.
struct RestrictedInstance {
    Fan fan;
    GroupAction action;
    std::vector<std::vector<Int>> basis;     // columns spanning ker(generator^l - 1), saturated
    std::vector<std::size_t> ray_origin;     // restricted ray index -> original ray index
};

// Restriction to the fixed subspace of generator^l: the ambient lattice
// becomes the saturated kernel of (generator^l - 1), the rays are the fixed
// rays rewritten in that basis (integrally, by saturation), the maximal cones
// are the facets of the fixed subcomplex, and the generator is the original
// one restricted to the kernel basis.  When the fixed subspace is zero this
// degenerates to the 0-dimensional instance with the trivial group, which is
// a value, not a failure.
inline RestrictedInstance restrict_to_fixed(const Fan& fan, const GroupAction& action, long l) {
    if (l < 1 || action.order % l != 0)
        throw InvariantViolation("restrict_to_fixed: " + std::to_string(l) +
                                 " does not divide the order " + std::to_string(action.order));

    const IntMatrix gl = action.generator.power(l);
    const auto basis = integer_kernel_basis(gl - IntMatrix::identity(fan.dim));
    const std::size_t delta = basis.size();

    const FixedData fixed = fixed_subcomplex(fan, action, l);
    if (fixed.delta != delta)
        throw InvariantViolation("restrict_to_fixed: kernel dimension disagrees with delta");

    RestrictedInstance restricted;
    restricted.basis = basis;

    // fixed rays, in ascending original index
    const auto perm = detail::perm_power(action.ray_perm, l);
    std::map<std::size_t, std::size_t> new_index;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        if (perm[i] != i) continue;
        new_index[i] = restricted.ray_origin.size();
        restricted.ray_origin.push_back(i);
    }

    restricted.fan.dim = delta;
    for (std::size_t i : restricted.ray_origin)
        restricted.fan.rays.push_back(coordinates_in_basis(basis, fan.rays[i]));
    for (const auto& facet : fixed.complex.facets) {
        std::vector<std::size_t> cone;
        for (std::size_t i : facet) cone.push_back(new_index.at(i));
        restricted.fan.maximal_cones.push_back(std::move(cone));
    }

    // generator of the quotient action in kernel coordinates
    IntMatrix restricted_gen(delta);
    for (std::size_t col = 0; col < delta; ++col) {
        auto coords = coordinates_in_basis(basis, action.generator.apply(basis[col]));
        for (std::size_t row = 0; row < delta; ++row) restricted_gen(row, col) = coords[row];
    }

    // the restriction is itself a valid proper instance; re-validating turns
    // the quotient argument into an assertion
    validate_fan(restricted.fan, ValidationLevel::Basic);
    restricted.action = validate_action(restricted.fan, restricted_gen, std::max(l, 1L));
    return restricted;
}

}  // namespace fanchar
