#pragma once

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "tpos/classes.hpp"
#include "tpos/cone.hpp"
#include "tpos/error.hpp"
#include "tpos/fan.hpp"
#include "tpos/linalg.hpp"
#include "tpos/rational.hpp"
#include "tpos/seshadri.hpp"

namespace tpos {

// Wire conventions: structural lattice data (fan rays, cone index sets) are
// JSON integers; every class coefficient and computed value is a canonical
// "p/q" string so no consumer ever touches a float. nlohmann::json keeps
// object keys sorted, so equal values serialize byte-identically.
using Json = nlohmann::json;

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
}

inline Rat rat_from_json(const Json& j, const std::string& field) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    throw input_error(field + ": expected a rational string \"p/q\" or an integer");
}

inline Json vec_to_json(const QVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rat_str(x));
    return arr;
}

inline QVec vec_from_json(const Json& j, const std::string& field) {
    require(j.is_array(), field + ": expected an array");
    QVec out;
    for (const auto& e : j) out.push_back(rat_from_json(e, field));
    return out;
}

inline Json mat_to_json(const QMat& m) {
    Json arr = Json::array();
    for (const auto& row : m) arr.push_back(vec_to_json(row));
    return arr;
}

// {"rays": [[1,0], ...], "max_cones": [[0,1], ...]}
inline Json fan_to_json(const Fan& fan) {
    Json j;
    Json rays = Json::array();
    for (const auto& r : fan.rays) {
        Json row = Json::array();
        for (const auto& x : r) {
            check_invariant(is_integer(x), "fan_to_json: ray entries must be integers");
            row.push_back(static_cast<std::int64_t>(x.get_num().get_si()));
        }
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    j["max_cones"] = fan.max_cones;
    return j;
}

// Parses and shape-checks a fan; smoothness or completeness are not decided
// here (the check command reports them, load_fan enforces them).
inline Fan fan_from_json(const Json& j) {
    require(j.is_object() && j.contains("rays") && j.contains("max_cones"),
            "fan: expected an object with \"rays\" and \"max_cones\"");
    Fan fan;
    require(j["rays"].is_array() && !j["rays"].empty(), "fan: \"rays\" must be a nonempty array");
    for (const auto& row : j["rays"]) {
        require(row.is_array(), "fan: each ray must be an array of integers");
        QVec r;
        for (const auto& e : row) {
            require(e.is_number_integer(), "fan: ray entries must be integers");
            r.emplace_back(static_cast<long>(e.get<std::int64_t>()));
        }
        fan.rays.push_back(std::move(r));
    }
    fan.dim = fan.rays.front().size();
    require(j["max_cones"].is_array(), "fan: \"max_cones\" must be an array");
    for (const auto& row : j["max_cones"]) {
        require(row.is_array(), "fan: each maximal cone must be an array of ray indices");
        std::vector<std::size_t> cone;
        for (const auto& e : row) {
            require(e.is_number_integer() && e.get<std::int64_t>() >= 0,
                    "fan: ray indices must be nonnegative integers");
            cone.push_back(static_cast<std::size_t>(e.get<std::int64_t>()));
        }
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    fan_structural_check(fan);
    return fan;
}

// The computing commands require smooth complete input.
inline Fan load_fan(const std::string& path) {
    Fan fan = fan_from_json(load_json(path));
    const auto v = fan_validate(fan);
    require(v.smooth, "fan in " + path + " is not smooth");
    require(v.complete, "fan in " + path + " is not complete");
    return fan;
}

// {"coeffs": ["3", "-1", ...]}
inline Json divisor_to_json(const QVec& a) {
    Json j;
    j["coeffs"] = vec_to_json(a);
    return j;
}

inline QVec divisor_from_json(const Json& j, const Fan& fan) {
    require(j.is_object() && j.contains("coeffs"), "divisor: expected an object with \"coeffs\"");
    QVec a = vec_from_json(j["coeffs"], "divisor coeffs");
    require(a.size() == fan.rays.size(),
            "divisor: got " + std::to_string(a.size()) + " coefficients for a fan with " +
                std::to_string(fan.rays.size()) + " rays");
    return a;
}

inline QVec load_divisor(const std::string& path, const Fan& fan) {
    return divisor_from_json(load_json(path), fan);
}

// {"pairings": ["1", "1", "1"]}; the entries are the pairings with the
// invariant divisors, so they must satisfy the ray relation.
inline Json curve_to_json(const QVec& c) {
    Json j;
    j["pairings"] = vec_to_json(c);
    return j;
}

inline QVec curve_from_json(const Json& j, const Fan& fan) {
    require(j.is_object() && j.contains("pairings"),
            "curve: expected an object with \"pairings\"");
    QVec c = vec_from_json(j["pairings"], "curve pairings");
    require(c.size() == fan.rays.size(),
            "curve: got " + std::to_string(c.size()) + " pairings for a fan with " +
                std::to_string(fan.rays.size()) + " rays");
    const QVec res = curve_constraint_residual(fan, c);
    if (!is_zero(res)) {
        std::string msg = "curve: pairings violate the ray relation; residual (";
        for (std::size_t i = 0; i < res.size(); ++i)
            msg += (i ? ", " : "") + rat_str(res[i]);
        throw input_error(msg + ")");
    }
    return c;
}

inline QVec load_curve(const std::string& path, const Fan& fan) {
    return curve_from_json(load_json(path), fan);
}

// {"k": 2, "values": [{"cone": [0, 1], "value": "1"}, ...]} feeding the
// table-driven nef dual class minimum.
struct NefDualTable {
    std::size_t k = 0;
    std::map<std::vector<std::size_t>, Rat> values;
};

inline NefDualTable nef_table_from_json(const Json& j) {
    require(j.is_object() && j.contains("k") && j.contains("values"),
            "nef table: expected an object with \"k\" and \"values\"");
    require(j["k"].is_number_integer() && j["k"].get<std::int64_t>() >= 1,
            "nef table: \"k\" must be a positive integer");
    NefDualTable table;
    table.k = static_cast<std::size_t>(j["k"].get<std::int64_t>());
    require(j["values"].is_array(), "nef table: \"values\" must be an array");
    for (const auto& row : j["values"]) {
        require(row.is_object() && row.contains("cone") && row.contains("value"),
                "nef table: each entry needs \"cone\" and \"value\"");
        require(row["cone"].is_array(), "nef table: \"cone\" must be an array of ray indices");
        std::vector<std::size_t> cone;
        for (const auto& e : row["cone"]) {
            require(e.is_number_integer() && e.get<std::int64_t>() >= 0,
                    "nef table: ray indices must be nonnegative integers");
            cone.push_back(static_cast<std::size_t>(e.get<std::int64_t>()));
        }
        std::sort(cone.begin(), cone.end());
        require(std::adjacent_find(cone.begin(), cone.end()) == cone.end(),
                "nef table: repeated ray index in a cone entry");
        const Rat v = rat_from_json(row["value"], "nef table value");
        require(table.values.emplace(std::move(cone), v).second,
                "nef table: duplicate cone entry");
    }
    return table;
}

inline NefDualTable load_nef_table(const std::string& path) {
    return nef_table_from_json(load_json(path));
}

inline std::string status_str(SeshadriStatus s) {
    switch (s) {
        case SeshadriStatus::Exact: return "exact";
        case SeshadriStatus::NegInfinityWitness: return "neg-infinity-witness";
        case SeshadriStatus::UpperBoundOnly: return "upper-bound-only";
    }
    throw internal_error("status_str: bad enum");
}

inline std::string method_str(SeshadriMethod m) {
    switch (m) {
        case SeshadriMethod::RayFormula: return "ray-formula";
        case SeshadriMethod::BlowupMaxShift: return "blowup-max-shift";
    }
    throw internal_error("method_str: bad enum");
}

// The value is "-inf" exactly when no finite Seshadri constant exists.
inline Json seshadri_result_to_json(const SeshadriResult& r) {
    Json j;
    j["value"] = r.neg_infinity ? "-inf" : rat_str(r.value);
    j["status"] = status_str(r.status);
    j["method"] = method_str(r.method);
    if (r.witness_ray) j["witness_ray"] = *r.witness_ray;
    return j;
}

inline Json fujita_result_to_json(const FujitaResult& r) {
    Json j;
    j["kind"] = r.kind == FujitaKind::DivisorAtPoint ? "divisor-at-point" : "curve-at-point";
    j["value"] = rat_str(r.value);
    return j;
}

inline Json null_locus_to_json(const NullLocus& nl) {
    Json j;
    j["rays"] = nl.rays;
    j["independent"] = nl.independent;
    j["witness_point_exists"] = nl.witness_point_exists;
    return j;
}

inline Json cone_to_json(const RationalCone& K) {
    Json j;
    j["ambient_dim"] = K.ambient_dim;
    j["rays"] = mat_to_json(K.rays);
    j["lines"] = mat_to_json(K.lines);
    j["facets"] = mat_to_json(K.facets);
    j["eqs"] = mat_to_json(K.eqs);
    return j;
}

// One row of a report's "checks" array; pass is exact string equality.
inline Json check_row(const std::string& name, const std::string& expected,
                      const std::string& got) {
    Json j;
    j["name"] = name;
    j["expected"] = expected;
    j["got"] = got;
    j["pass"] = (expected == got);
    return j;
}

}  // namespace tpos
