#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanchar/errors.hpp"
#include "fanchar/fan.hpp"
#include "fanchar/matrix.hpp"
#include "fanchar/numeric.hpp"

namespace fanchar {

// Raw instance as read from disk: structurally checked, not yet validated
// mathematically.
struct InstanceFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<std::size_t>> maximal_cones;
    std::vector<std::vector<Int>> generator;  // row-major dim x dim

    Fan fan() const {
        Fan f;
        f.dim = dim;
        f.rays = rays;
        f.maximal_cones = maximal_cones;
        return f;
    }

    IntMatrix generator_matrix() const { return IntMatrix(generator); }
};

namespace detail {

inline Int json_to_int(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(where + ": '" + v.get<std::string>() + "' is not an integer");
        }
    }
    throw ParseError(where + ": expected an integer");
}

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end()) throw ParseError(std::string("missing field '") + field + "'");
    return *it;
}

}  // namespace detail

inline InstanceFile parse_instance(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("instance file must be a JSON object");

    InstanceFile inst;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("field 'name' must be a string");
        inst.name = j["name"].get<std::string>();
    }

    const auto& dim_field = detail::require_field(j, "dim");
    if (!dim_field.is_number_unsigned() && !dim_field.is_number_integer())
        throw ParseError("field 'dim' must be an integer");
    long dim_value = dim_field.get<long>();
    if (dim_value < 0) throw ParseError("field 'dim' must be non-negative");
    inst.dim = static_cast<std::size_t>(dim_value);

    const auto& rays = detail::require_field(j, "rays");
    if (!rays.is_array()) throw ParseError("field 'rays' must be an array");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto& ray = rays[i];
        if (!ray.is_array())
            throw ParseError("ray " + std::to_string(i) + " must be an array");
        if (ray.size() != inst.dim)
            throw DimensionMismatch("ray " + std::to_string(i) + " has " +
                                    std::to_string(ray.size()) + " coordinates, expected " +
                                    std::to_string(inst.dim));
        std::vector<Int> vec;
        for (const auto& c : ray)
            vec.push_back(detail::json_to_int(c, "ray " + std::to_string(i)));
        inst.rays.push_back(std::move(vec));
    }

    const auto& cones = detail::require_field(j, "maximal_cones");
    if (!cones.is_array()) throw ParseError("field 'maximal_cones' must be an array");
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        const auto& cone = cones[ci];
        if (!cone.is_array())
            throw ParseError("maximal cone " + std::to_string(ci) + " must be an array");
        std::vector<std::size_t> indices;
        for (const auto& v : cone) {
            if (!v.is_number_unsigned() && !v.is_number_integer())
                throw ParseError("cone " + std::to_string(ci) + " has a non-integer index");
            long idx = v.get<long>();
            if (idx < 0 || static_cast<std::size_t>(idx) >= inst.rays.size())
                throw IndexOutOfRange("cone " + std::to_string(ci) + " references ray " +
                                      std::to_string(idx) + " but there are " +
                                      std::to_string(inst.rays.size()) + " rays");
            indices.push_back(static_cast<std::size_t>(idx));
        }
        inst.maximal_cones.push_back(std::move(indices));
    }

    const auto& gen = detail::require_field(j, "generator");
    if (!gen.is_array() || gen.size() != inst.dim)
        throw DimensionMismatch("field 'generator' must be a " + std::to_string(inst.dim) +
                                "x" + std::to_string(inst.dim) + " matrix");
    for (std::size_t r = 0; r < gen.size(); ++r) {
        const auto& row = gen[r];
        if (!row.is_array() || row.size() != inst.dim)
            throw DimensionMismatch("generator row " + std::to_string(r) + " has " +
                                    std::to_string(row.is_array() ? row.size() : 0) +
                                    " entries, expected " + std::to_string(inst.dim));
        std::vector<Int> vec;
        for (const auto& c : row)
            vec.push_back(detail::json_to_int(c, "generator row " + std::to_string(r)));
        inst.generator.push_back(std::move(vec));
    }
    return inst;
}

inline InstanceFile parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return parse_instance(j);
}

// Replace every ray by its primitive representative (opt-in; by default
// non-primitive rays are rejected during validation).
inline void normalize_rays(InstanceFile& inst) {
    for (auto& ray : inst.rays) {
        Int g = 0;
        for (const auto& x : ray) g = int_gcd(g, x);
        if (g > 1)
            for (auto& x : ray) x /= g;
    }
}

}  // namespace fanchar
