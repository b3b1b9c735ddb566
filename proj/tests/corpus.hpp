#pragma once

// Deterministic corpus of valid instances used by the property and acceptance
// suites: 2-D polygon fans with their lattice rotations and reflections, 3-D
// and 4-D cross-polytope fans with proper signed cyclic generators, simplex
// fans of prime order, and block-diagonal products of the above.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fanchar/fanchar.hpp"

namespace corpus {

using fanchar::Fan;
using fanchar::Int;
using fanchar::IntMatrix;

struct Instance {
    std::string name;
    Fan fan;
    IntMatrix generator;
};

inline IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return IntMatrix(r);
}

inline IntMatrix rot2() { return mat({{-1, 0}, {0, -1}}); }
inline IntMatrix rot3() { return mat({{0, -1}, {1, -1}}); }
inline IntMatrix rot4() { return mat({{0, -1}, {1, 0}}); }
inline IntMatrix rot6() { return mat({{1, -1}, {1, 0}}); }
inline IntMatrix reflect_x() { return mat({{1, 0}, {0, -1}}); }
inline IntMatrix swap_xy() { return mat({{0, 1}, {1, 0}}); }

namespace detail {

inline int half_plane(const std::vector<Int>& v) {
    if (v[1] > 0) return 0;
    if (v[1] == 0 && v[0] > 0) return 0;
    return 1;
}

inline bool angle_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    const int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace detail

// Complete 2-D fan on the given rays: sort by angle, take consecutive pairs.
inline Fan polygon_fan(std::vector<std::vector<Int>> rays) {
    std::sort(rays.begin(), rays.end(), detail::angle_less);
    Fan fan;
    fan.dim = 2;
    fan.rays = std::move(rays);
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        fan.maximal_cones.push_back({i, (i + 1) % fan.rays.size()});
    return fan;
}

// Union of generator-orbits of the given seed rays.
inline std::vector<std::vector<Int>> orbit_rays(const IntMatrix& g,
                                                const std::vector<std::vector<long>>& seeds) {
    std::vector<std::vector<Int>> rays;
    for (const auto& seed : seeds) {
        std::vector<Int> v(seed.begin(), seed.end());
        const std::vector<Int> start = v;
        do {
            rays.push_back(v);
            v = g.apply(v);
        } while (v != start);
    }
    return rays;
}

inline Instance polygon_instance(std::string name, const IntMatrix& symmetry,
                                 const std::vector<std::vector<long>>& seeds,
                                 const IntMatrix& generator) {
    return {std::move(name), polygon_fan(orbit_rays(symmetry, seeds)), generator};
}

// Cross-polytope fan: rays +-e_i, maximal cones the 2^d orthants.
inline Fan cross_polytope_fan(std::size_t d) {
    Fan fan;
    fan.dim = d;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Int> plus(d, Int(0)), minus(d, Int(0));
        plus[i] = 1;
        minus[i] = -1;
        fan.rays.push_back(plus);   // index 2i
        fan.rays.push_back(minus);  // index 2i+1
    }
    for (std::size_t signs = 0; signs < (std::size_t{1} << d); ++signs) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i < d; ++i)
            cone.push_back(2 * i + ((signs >> i) & 1));
        fan.maximal_cones.push_back(std::move(cone));
    }
    return fan;
}

// Fan of the projective space on m rays e_1..e_{m-1}, -(e_1+...+e_{m-1});
// maximal cones are all (m-1)-subsets.  The cyclic shift is proper exactly
// when m is prime.
inline Fan simplex_fan(std::size_t m) {
    Fan fan;
    fan.dim = m - 1;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<Int> e(m - 1, Int(0));
        e[i] = 1;
        fan.rays.push_back(std::move(e));
    }
    fan.rays.emplace_back(m - 1, Int(-1));
    for (std::size_t skip = 0; skip < m; ++skip) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i < m; ++i)
            if (i != skip) cone.push_back(i);
        fan.maximal_cones.push_back(std::move(cone));
    }
    return fan;
}

// Order-m rotation of the simplex fan: e_i -> e_{i+1}, e_{m-1} -> -(sum e_i).
inline IntMatrix simplex_rotation(std::size_t m) {
    IntMatrix g(m - 1);
    for (std::size_t i = 0; i + 1 < m - 1; ++i) g(i + 1, i) = 1;
    for (std::size_t i = 0; i < m - 1; ++i) g(i, m - 2) = -1;
    return g;
}

// Product fan with the block-diagonal generator.
inline Instance product(const Instance& a, const Instance& b) {
    Instance p;
    p.name = a.name + " x " + b.name;
    p.fan.dim = a.fan.dim + b.fan.dim;
    for (const auto& ray : a.fan.rays) {
        std::vector<Int> v = ray;
        v.resize(p.fan.dim, Int(0));
        p.fan.rays.push_back(std::move(v));
    }
    for (const auto& ray : b.fan.rays) {
        std::vector<Int> v(a.fan.dim, Int(0));
        v.insert(v.end(), ray.begin(), ray.end());
        p.fan.rays.push_back(std::move(v));
    }
    for (const auto& ca : a.fan.maximal_cones)
        for (const auto& cb : b.fan.maximal_cones) {
            std::vector<std::size_t> cone = ca;
            for (std::size_t i : cb) cone.push_back(a.fan.rays.size() + i);
            p.fan.maximal_cones.push_back(std::move(cone));
        }
    p.generator = IntMatrix(p.fan.dim);
    for (std::size_t i = 0; i < a.fan.dim; ++i)
        for (std::size_t j = 0; j < a.fan.dim; ++j) p.generator(i, j) = a.generator(i, j);
    for (std::size_t i = 0; i < b.fan.dim; ++i)
        for (std::size_t j = 0; j < b.fan.dim; ++j)
            p.generator(a.fan.dim + i, a.fan.dim + j) = b.generator(i, j);
    return p;
}

inline Instance segment_instance() {
    Fan fan;
    fan.dim = 1;
    fan.rays = {{Int(1)}, {Int(-1)}};
    fan.maximal_cones = {{0}, {1}};
    IntMatrix g(1);
    g(0, 0) = -1;
    return {"segment with sign flip", fan, g};
}

inline std::vector<Instance> all_instances() {
    std::vector<Instance> base;

    // 2-D polygon fans with rotations
    base.push_back(polygon_instance("triangle rot3", rot3(), {{1, 0}}, rot3()));
    base.push_back(polygon_instance("square rot4", rot4(), {{1, 0}}, rot4()));
    base.push_back(polygon_instance("square rot2", rot4(), {{1, 0}}, rot2()));
    base.push_back(polygon_instance("hexagon rot6", rot6(), {{1, 0}}, rot6()));
    base.push_back(polygon_instance("hexagon rot3", rot6(), {{1, 0}}, rot3()));
    base.push_back(polygon_instance("hexagon rot2", rot6(), {{1, 0}}, rot2()));
    base.push_back(polygon_instance("hexagon swap reflection", rot6(), {{1, 0}}, swap_xy()));
    base.push_back(polygon_instance("octagon rot4", rot4(), {{1, 0}, {1, 1}}, rot4()));
    base.push_back(polygon_instance("octagon rot2", rot4(), {{1, 0}, {1, 1}}, rot2()));
    base.push_back(polygon_instance("octagon reflection", rot4(), {{1, 0}, {1, 1}}, reflect_x()));
    base.push_back(polygon_instance("skew octagon rot4", rot4(), {{1, 0}, {2, 1}}, rot4()));
    base.push_back(polygon_instance("12-gon rot6", rot6(), {{1, 0}, {2, 1}}, rot6()));
    base.push_back(polygon_instance("12-gon rot3", rot6(), {{1, 0}, {2, 1}}, rot3()));
    base.push_back(polygon_instance("12-gon rot2", rot6(), {{1, 0}, {2, 1}}, rot2()));
    base.push_back(polygon_instance("12-gon rot4", rot4(), {{1, 0}, {1, 1}, {2, 1}}, rot4()));
    base.push_back(polygon_instance("hexagon rot3 seeds", rot3(), {{1, 0}, {-1, 1}}, rot3()));
    base.push_back(polygon_instance("9-gon rot3", rot3(), {{1, 0}, {-1, 1}, {1, 1}}, rot3()));
    base.push_back(
        polygon_instance("12-gon rot3 seeds", rot3(), {{1, 0}, {-1, 1}, {1, 1}, {1, 2}}, rot3()));
    base.push_back(polygon_instance("symmetric hexagon rot2", rot2(), {{1, 0}, {1, 1}, {0, 1}},
                                    rot2()));
    base.push_back(polygon_instance("symmetric octagon rot2", rot2(),
                                    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}}, rot2()));
    base.push_back(polygon_instance("symmetric 10-gon rot2", rot2(),
                                    {{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}}, rot2()));
    base.push_back(polygon_instance("symmetric 12-gon rot2", rot2(),
                                    {{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}, {-1, 1}}, rot2()));
    base.push_back(polygon_instance("product of lines reflection", rot4(), {{1, 0}},
                                    reflect_x()));

    // odd polygons with only the trivial symmetry
    base.push_back(polygon_instance("pentagon trivial", IntMatrix::identity(2),
                                    {{1, 0}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}},
                                    IntMatrix::identity(2)));
    base.push_back(polygon_instance(
        "heptagon trivial", IntMatrix::identity(2),
        {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}}, IntMatrix::identity(2)));

    // 3-D cross-polytope with proper signed generators
    const Fan cross3 = cross_polytope_fan(3);
    base.push_back({"cross3 identity", cross3, IntMatrix::identity(3)});
    base.push_back({"cross3 -identity", cross3, mat({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})});
    base.push_back({"cross3 signed 2-cycle", cross3, mat({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}})});
    base.push_back(
        {"cross3 signed 2-cycle flip", cross3, mat({{0, -1, 0}, {1, 0, 0}, {0, 0, -1}})});
    base.push_back({"cross3 mirror", cross3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})});
    base.push_back({"cross3 double mirror", cross3, mat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})});

    // 4-D cross-polytope with signed cyclic generators
    const Fan cross4 = cross_polytope_fan(4);
    base.push_back({"cross4 signed 4-cycle", cross4,
                    mat({{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})});
    base.push_back({"cross4 two signed 2-cycles", cross4,
                    mat({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}})});

    // simplex fans of prime order
    for (std::size_t m : {5, 7, 11})
        base.push_back({"simplex fan order " + std::to_string(m), simplex_fan(m),
                        simplex_rotation(m)});

    std::vector<Instance> out = base;

    // block-diagonal products for composite and larger orders
    auto named = [&](const std::string& name) -> const Instance& {
        for (const auto& inst : base)
            if (inst.name == name) return inst;
        throw std::logic_error("corpus instance not found: " + name);
    };
    const Instance segment = segment_instance();
    const Instance triangle = named("triangle rot3");
    const Instance square = named("square rot4");
    const Instance hexagon = named("hexagon rot6");
    const Instance pentagon = named("pentagon trivial");
    const Instance reflection = named("product of lines reflection");
    const Instance simplex5 = {"simplex fan order 5", simplex_fan(5), simplex_rotation(5)};

    out.push_back(product(triangle, square));    // order 12
    out.push_back(product(triangle, hexagon));   // order 6
    out.push_back(product(square, hexagon));     // order 12
    out.push_back(product(square, square));      // order 4
    out.push_back(product(hexagon, hexagon));    // order 6
    out.push_back(product(triangle, triangle));  // order 3
    out.push_back(product(segment, triangle));   // order 6
    out.push_back(product(segment, square));     // order 4
    out.push_back(product(segment, hexagon));    // order 6
    out.push_back(product(segment, simplex5));   // order 10
    out.push_back(product(triangle, simplex5));  // order 15
    out.push_back(product(pentagon, square));    // order 4, 4-dim
    out.push_back(product(reflection, triangle));  // order 6
    out.push_back(product(reflection, hexagon));   // order 6
    out.push_back(segment);

    return out;
}

}  // namespace corpus
