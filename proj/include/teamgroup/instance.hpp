#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "teamgroup/rational.hpp"

namespace tg {

struct Individual {
    std::string id;
    std::vector<std::string> skills;
    long long load = 1;  // number of teams this individual may join

    bool operator==(const Individual&) const = default;
};

struct Task {
    std::string id;
    std::vector<std::string> skills;  // required skill set
    Rational profit{0};
    std::optional<long long> capacity;  // nullopt = may be performed any number of times

    bool operator==(const Task&) const = default;
};

enum class CompatibilityMode { None, Connected, Diameter };

struct Compatibility {
    CompatibilityMode mode = CompatibilityMode::Connected;
    long long bound = 1;  // induced-diameter limit, meaningful only in Diameter mode

    bool operator==(const Compatibility&) const = default;
};

/// A full problem instance. Immutable by convention once built; every
/// operation in this library takes it by const reference.
struct Instance {
    std::vector<std::string> skills;
    std::vector<Individual> individuals;
    std::vector<std::pair<std::string, std::string>> edges;  // unordered pairs
    std::vector<Task> tasks;
    Compatibility compatibility;

    bool operator==(const Instance&) const = default;
};

struct Diagnostic {
    std::string code;     // stable machine identifier, e.g. "unknown-skill"
    std::string entity;   // offending id / edge
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

/// Checks every structural invariant; returns one diagnostic per violation,
/// empty when the instance is valid.
inline std::vector<Diagnostic> validate_instance(const Instance& inst) {
    std::vector<Diagnostic> out;
    auto add = [&](std::string code, std::string entity, std::string message) {
        out.push_back({std::move(code), std::move(entity), std::move(message)});
    };

    std::unordered_set<std::string> skill_ids;
    for (const auto& s : inst.skills) {
        if (s.empty()) {
            add("empty-skill-id", s, "skill with empty id");
        } else if (!skill_ids.insert(s).second) {
            add("duplicate-skill", s, "skill id appears more than once");
        }
    }

    std::unordered_set<std::string> individual_ids;
    for (const auto& u : inst.individuals) {
        if (u.id.empty()) {
            add("empty-individual-id", u.id, "individual with empty id");
        } else if (!individual_ids.insert(u.id).second) {
            add("duplicate-individual", u.id, "individual id appears more than once");
        }
        for (const auto& s : u.skills) {
            if (!skill_ids.count(s)) {
                add("unknown-skill", u.id, "individual " + u.id + " references unknown skill " + s);
            }
        }
        if (u.load < 1) {
            add("load-too-small", u.id,
                "individual " + u.id + " has load " + std::to_string(u.load) + " (must be >= 1)");
        }
    }

    std::unordered_set<std::string> task_ids;
    for (const auto& t : inst.tasks) {
        if (t.id.empty()) {
            add("empty-task-id", t.id, "task with empty id");
        } else if (!task_ids.insert(t.id).second) {
            add("duplicate-task", t.id, "task id appears more than once");
        }
        if (t.skills.empty()) {
            add("empty-required-skills", t.id, "task " + t.id + " requires no skills");
        }
        for (const auto& s : t.skills) {
            if (!skill_ids.count(s)) {
                add("unknown-skill", t.id, "task " + t.id + " references unknown skill " + s);
            }
        }
        if (t.profit < Rational(0)) {
            add("negative-profit", t.id, "task " + t.id + " has negative profit");
        }
        if (t.capacity && *t.capacity < 1) {
            add("capacity-too-small", t.id,
                "task " + t.id + " has capacity " + std::to_string(*t.capacity) + " (must be >= 1)");
        }
    }

    std::set<std::pair<std::string, std::string>> seen_edges;
    for (const auto& [a, b] : inst.edges) {
        const std::string label = a + "--" + b;
        if (!individual_ids.count(a) || !individual_ids.count(b)) {
            add("unknown-individual", label, "edge references unknown individual");
            continue;
        }
        if (a == b) {
            add("self-loop", label, "edge joins " + a + " to itself");
            continue;
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!seen_edges.insert(key).second) {
            add("duplicate-edge", label, "edge appears more than once");
        }
    }

    if (inst.compatibility.mode == CompatibilityMode::Diameter && inst.compatibility.bound < 1) {
        add("diameter-bound-too-small", "compatibility", "diameter bound must be >= 1");
    }
    if (inst.individuals.empty()) {
        add("no-individuals", "instance", "instance has no individuals");
    }
    if (inst.tasks.empty()) {
        add("no-tasks", "instance", "instance has no tasks");
    }
    return out;
}

struct ExpandedInstance {
    Instance instance;
    std::vector<std::string> source_id;  // per expanded individual: id it was copied from
};

/// Unit-load reduction: individual u with load f becomes f copies u#1..u#f,
/// each with u's skill set and load 1. Copies inherit every edge of u, and
/// copies of the same individual form a clique, so any team formable with u
/// stays formable with each copy.
inline ExpandedInstance expand_load_limits_with_sources(const Instance& inst) {
    ExpandedInstance out;
    out.instance.skills = inst.skills;
    out.instance.tasks = inst.tasks;
    out.instance.compatibility = inst.compatibility;

    std::unordered_set<std::string> used;
    for (const auto& u : inst.individuals) {
        used.insert(u.id);
    }
    std::vector<std::vector<std::string>> copies(inst.individuals.size());
    for (std::size_t i = 0; i < inst.individuals.size(); ++i) {
        const auto& u = inst.individuals[i];
        if (u.load < 1) {
            throw std::invalid_argument("expand_load_limits: load < 1 for " + u.id);
        }
        for (long long k = 1; k <= u.load; ++k) {
            std::string copy_id = u.id + "#" + std::to_string(k);
            if (!used.insert(copy_id).second) {
                throw std::runtime_error("expand_load_limits: generated id collides: " + copy_id);
            }
            copies[i].push_back(copy_id);
            out.instance.individuals.push_back({copy_id, u.skills, 1});
            out.source_id.push_back(u.id);
        }
    }

    auto& edges = out.instance.edges;
    for (const auto& group : copies) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                edges.emplace_back(group[i], group[j]);
            }
        }
    }
    std::unordered_map<std::string, std::size_t> original_index;
    original_index.reserve(inst.individuals.size());
    for (std::size_t i = 0; i < inst.individuals.size(); ++i) {
        original_index.emplace(inst.individuals[i].id, i);
    }
    for (const auto& [a, b] : inst.edges) {
        const auto ita = original_index.find(a);
        const auto itb = original_index.find(b);
        if (ita == original_index.end() || itb == original_index.end()) {
            throw std::invalid_argument("expand_load_limits: edge references unknown individual");
        }
        const auto ia = ita->second;
        const auto ib = itb->second;
        for (const auto& ca : copies[ia]) {
            for (const auto& cb : copies[ib]) {
                edges.emplace_back(ca, cb);
            }
        }
    }
    return out;
}

inline Instance expand_load_limits(const Instance& inst) {
    return expand_load_limits_with_sources(inst).instance;
}

}  // namespace tg
