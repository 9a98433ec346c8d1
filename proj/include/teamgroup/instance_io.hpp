#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "teamgroup/instance.hpp"

namespace tg {

/// Raised when an instance file cannot be turned into a valid Instance.
struct ParseError : std::runtime_error {
    enum class Kind { Syntax, Reference, Domain };

    ParseError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}

    Kind kind;
};

namespace detail {

inline Rational profit_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_number_float()) {
        try {
            return rational_from_double(j.get<double>());
        } catch (const std::domain_error& e) {
            throw ParseError(ParseError::Kind::Syntax, std::string("profit: ") + e.what());
        }
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(ParseError::Kind::Syntax, std::string("profit: ") + e.what());
        }
    }
    throw ParseError(ParseError::Kind::Syntax, "profit must be a number or a \"num/den\" string");
}

inline long long integer_field(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ParseError(ParseError::Kind::Syntax, std::string(what) + " must be an integer");
    }
    return j.get<long long>();
}

}  // namespace detail

/// Parses the JSON instance format without running validation; only structural
/// (syntax-level) problems throw. Use parse_instance for a validated result.
inline Instance parse_instance_unvalidated(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(ParseError::Kind::Syntax, e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(ParseError::Kind::Syntax, "instance document must be a JSON object");
    }
    auto require_array = [&](const char* key) -> const nlohmann::json& {
        auto it = doc.find(key);
        if (it == doc.end() || !it->is_array()) {
            throw ParseError(ParseError::Kind::Syntax,
                             std::string("missing or non-array field: ") + key);
        }
        return *it;
    };

    Instance inst;
    for (const auto& s : require_array("skills")) {
        if (!s.is_string()) {
            throw ParseError(ParseError::Kind::Syntax, "skills must be strings");
        }
        inst.skills.push_back(s.get<std::string>());
    }

    for (const auto& j : require_array("individuals")) {
        if (!j.is_object() || !j.contains("id") || !j["id"].is_string() ||
            !j.contains("skills") || !j["skills"].is_array()) {
            throw ParseError(ParseError::Kind::Syntax,
                             "individual entries need a string id and a skills array");
        }
        Individual u;
        u.id = j["id"].get<std::string>();
        for (const auto& s : j["skills"]) {
            if (!s.is_string()) {
                throw ParseError(ParseError::Kind::Syntax, "individual skills must be strings");
            }
            u.skills.push_back(s.get<std::string>());
        }
        if (j.contains("load")) {
            u.load = detail::integer_field(j["load"], "load");
        }
        inst.individuals.push_back(std::move(u));
    }

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
            throw ParseError(ParseError::Kind::Syntax, "edges must be an array");
        }
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                throw ParseError(ParseError::Kind::Syntax,
                                 "each edge must be an array of two individual ids");
            }
            inst.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }

    for (const auto& j : require_array("tasks")) {
        if (!j.is_object() || !j.contains("id") || !j["id"].is_string() ||
            !j.contains("skills") || !j["skills"].is_array() || !j.contains("profit")) {
            throw ParseError(ParseError::Kind::Syntax,
                             "task entries need a string id, a skills array, and a profit");
        }
        Task t;
        t.id = j["id"].get<std::string>();
        for (const auto& s : j["skills"]) {
            if (!s.is_string()) {
                throw ParseError(ParseError::Kind::Syntax, "task skills must be strings");
            }
            t.skills.push_back(s.get<std::string>());
        }
        t.profit = detail::profit_from_json(j["profit"]);
        if (j.contains("capacity")) {
            t.capacity = detail::integer_field(j["capacity"], "capacity");
        }
        inst.tasks.push_back(std::move(t));
    }

    if (doc.contains("compatibility")) {
        const auto& c = doc["compatibility"];
        if (!c.is_object() || !c.contains("mode") || !c["mode"].is_string()) {
            throw ParseError(ParseError::Kind::Syntax, "compatibility needs a mode string");
        }
        const std::string mode = c["mode"].get<std::string>();
        if (mode == "none") {
            inst.compatibility.mode = CompatibilityMode::None;
        } else if (mode == "connected") {
            inst.compatibility.mode = CompatibilityMode::Connected;
        } else if (mode == "diameter") {
            inst.compatibility.mode = CompatibilityMode::Diameter;
            if (!c.contains("bound")) {
                throw ParseError(ParseError::Kind::Syntax, "diameter mode requires a bound");
            }
            inst.compatibility.bound = detail::integer_field(c["bound"], "bound");
        } else {
            throw ParseError(ParseError::Kind::Syntax, "unknown compatibility mode: " + mode);
        }
    }
    return inst;
}

/// Parses and validates; throws ParseError carrying the first diagnostic when
/// the document is structurally fine but semantically broken.
inline Instance parse_instance(const std::string& text) {
    Instance inst = parse_instance_unvalidated(text);
    const auto diagnostics = validate_instance(inst);
    if (!diagnostics.empty()) {
        const auto& d = diagnostics.front();
        const bool reference = d.code == "unknown-skill" || d.code == "unknown-individual";
        throw ParseError(reference ? ParseError::Kind::Reference : ParseError::Kind::Domain,
                         d.code + " (" + d.entity + "): " + d.message);
    }
    return inst;
}

/// Inverse of parse_instance up to field defaults: parse(serialize(x)) == x
/// for every valid instance x.
inline std::string serialize_instance(const Instance& inst) {
    nlohmann::ordered_json doc;
    doc["skills"] = inst.skills;
    auto& individuals = doc["individuals"] = nlohmann::ordered_json::array();
    for (const auto& u : inst.individuals) {
        nlohmann::ordered_json j;
        j["id"] = u.id;
        j["skills"] = u.skills;
        if (u.load != 1) {
            j["load"] = u.load;
        }
        individuals.push_back(std::move(j));
    }
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : inst.edges) {
        edges.push_back({a, b});
    }
    auto& tasks = doc["tasks"] = nlohmann::ordered_json::array();
    for (const auto& t : inst.tasks) {
        nlohmann::ordered_json j;
        j["id"] = t.id;
        j["skills"] = t.skills;
        if (t.profit.denominator() == 1) {
            j["profit"] = t.profit.numerator();
        } else {
            j["profit"] = format_rational(t.profit);
        }
        if (t.capacity) {
            j["capacity"] = *t.capacity;
        }
        tasks.push_back(std::move(j));
    }
    auto& compat = doc["compatibility"] = nlohmann::ordered_json::object();
    switch (inst.compatibility.mode) {
        case CompatibilityMode::None:
            compat["mode"] = "none";
            break;
        case CompatibilityMode::Connected:
            compat["mode"] = "connected";
            break;
        case CompatibilityMode::Diameter:
            compat["mode"] = "diameter";
            compat["bound"] = inst.compatibility.bound;
            break;
    }
    return doc.dump(2);
}

}  // namespace tg
