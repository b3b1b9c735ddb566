#pragma once

#include <vector>

#include "fanchar/fanchar.hpp"

namespace testutil {

using fanchar::Fan;
using fanchar::Int;
using fanchar::IntMatrix;
using fanchar::IntPolynomial;

inline IntPolynomial poly(const std::vector<long>& coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

inline IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return IntMatrix(r);
}

inline std::vector<Int> vec(const std::vector<long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

inline Fan projective_plane_fan() {
    Fan fan;
    fan.dim = 2;
    fan.rays = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
    fan.maximal_cones = {{0, 1}, {1, 2}, {2, 0}};
    return fan;
}

inline Fan product_of_lines_fan() {
    Fan fan;
    fan.dim = 2;
    fan.rays = {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})};
    fan.maximal_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return fan;
}

inline Fan hexagon_fan() {
    Fan fan;
    fan.dim = 2;
    fan.rays = {vec({1, 0}),  vec({1, 1}),   vec({0, 1}),
                vec({-1, 0}), vec({-1, -1}), vec({0, -1})};
    fan.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
    return fan;
}

inline IntMatrix order3_generator() { return mat({{0, -1}, {1, -1}}); }
inline IntMatrix rotation90() { return mat({{0, -1}, {1, 0}}); }
inline IntMatrix rotation60() { return mat({{1, -1}, {1, 0}}); }
inline IntMatrix reflection() { return mat({{1, 0}, {0, -1}}); }

}  // namespace testutil
