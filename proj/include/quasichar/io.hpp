#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "quasipoly.hpp"

namespace quasichar {

using Json = nlohmann::json;

inline Ring ring_from_json(const Json& j, const std::string& where = "ring") {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError(where + ": expected an object with a string \"type\"");
    std::string type = j["type"];
    if (type == "Z") return Ring::integers();
    if (type == "quadratic") {
        if (!j.contains("d") || !j["d"].is_number_integer()) throw ParseError(where + ".d: expected an integer");
        return Ring::quadratic(j["d"].get<Int>());
    }
    throw ParseError(where + ".type: unknown ring type '" + type + "'");
}

inline Json ring_to_json(const Ring& r) {
    if (r.is_integers()) return {{"type", "Z"}};
    return {{"type", "quadratic"}, {"d", r.d()}};
}

inline Element element_from_json(const Ring& ring, const Json& j, const std::string& where) {
    if (j.is_number_integer()) return {j.get<Int>(), 0};
    if (!ring.is_integers() && j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return {j[0].get<Int>(), j[1].get<Int>()};
    throw ParseError(where + ": expected " + std::string(ring.is_integers() ? "an integer" : "an integer or [a, b]"));
}

inline Json element_to_json(const Ring& ring, const Element& e) {
    if (ring.is_integers()) return e.a;
    return Json::array({e.a, e.b});
}

inline std::vector<Element> elements_from_json(const Ring& ring, const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of elements");
    std::vector<Element> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element_from_json(ring, j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline Json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline Ideal ideal_from_json(const Ring& ring, const Json& j, const std::string& where = "ideal") {
    auto gens = elements_from_json(ring, j, where);
    return Ideal::from_generators(ring, gens);
}

inline Ideal parse_ideal(const Ring& ring, const std::string& text) {
    return ideal_from_json(ring, parse_json_text(text, "ideal"), "ideal");
}

inline Json ideal_to_json(const Ideal& x) {
    Json g = Json::array();
    for (const auto& e : x.generators()) g.push_back(element_to_json(x.ring(), e));
    return g;
}

inline Json hnf_to_json(const Ideal& x) {
    if (x.ring().is_integers()) return Json::array({Json::array({x.a()})});
    return Json::array({Json::array({x.a(), 0}), Json::array({x.b(), x.c()})});
}

/// {"ring": ..., "name"?: ..., "ell"?: INT, "columns": [[ELEM x l] x n]}; "ell" is
/// only needed when there are no columns.
inline Arrangement arrangement_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("top level: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "ring" && it.key() != "name" && it.key() != "columns" && it.key() != "ell")
            throw ParseError("top level: unexpected key '" + it.key() + "'");
    if (!j.contains("ring")) throw ParseError("top level: missing \"ring\"");
    if (!j.contains("columns")) throw ParseError("top level: missing \"columns\"");
    Ring ring = ring_from_json(j["ring"]);
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("name: expected a string");
        name = j["name"];
    }
    const Json& cols = j["columns"];
    if (!cols.is_array()) throw ParseError("columns: expected a list");
    std::vector<std::vector<Element>> columns;
    for (std::size_t c = 0; c < cols.size(); ++c)
        columns.push_back(elements_from_json(ring, cols[c], "columns[" + std::to_string(c) + "]"));
    std::size_t ell = 0;
    if (j.contains("ell")) {
        if (!j["ell"].is_number_unsigned()) throw ParseError("ell: expected a positive integer");
        ell = j["ell"].get<std::size_t>();
    }
    if (!columns.empty()) {
        if (ell != 0 && ell != columns[0].size()) throw ParseError("ell: disagrees with column length");
        ell = columns[0].size();
    }
    if (ell == 0) throw ParseError("ell: required when there are no columns");
    return Arrangement(ring, ell, std::move(columns), name);
}

inline Json arrangement_to_json(const Arrangement& a) {
    Json cols = Json::array();
    for (const auto& c : a.columns()) {
        Json col = Json::array();
        for (const auto& e : c) col.push_back(element_to_json(a.ring(), e));
        cols.push_back(col);
    }
    Json j = {{"ring", ring_to_json(a.ring())}, {"columns", cols}};
    if (!a.name().empty()) j["name"] = a.name();
    if (a.size() == 0) j["ell"] = a.ell();
    return j;
}

inline Arrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return arrangement_from_json(parse_json_text(ss.str(), path));
}

inline Json quasi_to_json(const QuasiPolynomial& q) {
    Json cons = Json::array();
    for (const auto& [k, p] : q.constituents())
        cons.push_back({{"kappa", ideal_to_json(k)}, {"factored", factored_string(k)}, {"hnf", hnf_to_json(k)}, {"coeffs", p.coeffs()}});
    return {{"ring", ring_to_json(q.ring())},
            {"period", {{"generators", ideal_to_json(q.period())}, {"factored", factored_string(q.period())}, {"hnf", hnf_to_json(q.period())}}},
            {"constituents", cons}};
}

inline QuasiPolynomial quasi_from_json(const Json& j) {
    Ring ring = ring_from_json(j.at("ring"));
    Ideal period = ideal_from_json(ring, j.at("period").at("generators"), "period");
    std::vector<std::pair<Ideal, Polynomial>> cons;
    for (const auto& c : j.at("constituents"))
        cons.push_back({ideal_from_json(ring, c.at("kappa"), "kappa"), Polynomial(c.at("coeffs").get<std::vector<Int>>())});
    return QuasiPolynomial(period, std::move(cons));
}

} // namespace quasichar
