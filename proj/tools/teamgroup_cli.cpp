// Command-line front end: validate instance files, compute LP bounds, and
// solve by the exact or LP-rounding pipelines, emitting JSON documents with a
// stable field order. All randomness flows from --seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "teamgroup/teamgroup.hpp"

namespace {

constexpr int kExitValidation = 1;  // also scale-guard refusals
constexpr int kExitParse = 2;       // file / syntax / semantic parse errors
constexpr int kExitMismatch = 3;    // algorithm or pricing unusable on this instance

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Numbers carry 9 significant digits.
std::string format_number(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string assignments_json(const std::vector<tg::Assignment>& assignments) {
    std::string out = "[";
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += "{\"task\": \"" + json_escape(assignments[i].task_id) + "\", \"team\": [";
        for (std::size_t j = 0; j < assignments[i].members.size(); ++j) {
            if (j) {
                out += ", ";
            }
            out += "\"" + json_escape(assignments[i].members[j]) + "\"";
        }
        out += "]}";
    }
    return out + "]";
}

std::string solve_document(double profit, std::optional<double> lp_bound,
                           const std::vector<tg::Assignment>& assignments,
                           const std::string& algorithm, const std::string& guarantee,
                           int iterations) {
    std::string doc = "{";
    doc += "\"profit\": " + format_number(profit);
    doc += ", \"lp_bound\": " + (lp_bound ? format_number(*lp_bound) : std::string("null"));
    doc += ", \"assignments\": " + assignments_json(assignments);
    doc += ", \"algorithm\": \"" + json_escape(algorithm) + "\"";
    doc += ", \"guarantee\": \"" + json_escape(guarantee) + "\"";
    doc += ", \"iterations\": " + std::to_string(iterations);
    doc += "}";
    return doc;
}

int emit(const std::string& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc << "\n";
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return kExitParse;
    }
    out << doc << "\n";
    return 0;
}

// Copy ids like "a#2" map back to the original individual ids.
std::vector<tg::Assignment> map_to_sources(const std::vector<tg::Assignment>& assignments,
                                           const tg::ExpandedInstance& expanded) {
    std::unordered_map<std::string, std::string> source;
    for (std::size_t i = 0; i < expanded.instance.individuals.size(); ++i) {
        source.emplace(expanded.instance.individuals[i].id, expanded.source_id[i]);
    }
    std::vector<tg::Assignment> out;
    out.reserve(assignments.size());
    for (const auto& a : assignments) {
        tg::Assignment mapped;
        mapped.task_id = a.task_id;
        for (const auto& id : a.members) {
            auto it = source.find(id);
            mapped.members.push_back(it == source.end() ? id : it->second);
        }
        std::sort(mapped.members.begin(), mapped.members.end());
        out.push_back(std::move(mapped));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int run_validate(const std::string& input) {
    auto text = read_file(input);
    if (!text) {
        std::cerr << "error: cannot read " << input << "\n";
        return kExitParse;
    }
    tg::Instance inst;
    try {
        inst = tg::parse_instance_unvalidated(*text);
    } catch (const tg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    const auto diagnostics = tg::validate_instance(inst);
    for (const auto& d : diagnostics) {
        std::cout << d.code << " (" << d.entity << "): " << d.message << "\n";
    }
    return diagnostics.empty() ? 0 : kExitValidation;
}

int run_solve(const std::string& input, const std::string& algorithm, const std::string& pricing,
              std::uint64_t seed, const std::string& output_path) {
    auto text = read_file(input);
    if (!text) {
        std::cerr << "error: cannot read " << input << "\n";
        return kExitParse;
    }
    tg::Instance inst;
    try {
        inst = tg::parse_instance(*text);
    } catch (const tg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    const auto oracle =
        pricing == "greedy" ? tg::PricingOracle::Greedy : tg::PricingOracle::Exact;
    if (oracle == tg::PricingOracle::Greedy &&
        inst.compatibility.mode != tg::CompatibilityMode::None) {
        std::cerr << "error: greedy pricing is only sound without a compatibility "
                     "constraint (mode \"none\")\n";
        return kExitMismatch;
    }

    try {
        if (algorithm == "exact") {
            tg::InstanceView view(inst);
            const auto grouping = tg::brute_force_optimal(view);
            return emit(solve_document(tg::to_double(grouping.profit), std::nullopt,
                                       grouping.assignments, "exact", "optimal", 0),
                        output_path);
        }

        const auto expanded = tg::expand_load_limits_with_sources(inst);
        tg::InstanceView view(expanded.instance);
        const bool capacitated = view.has_finite_capacity();

        if (algorithm == "approx-tg") {
            const auto report = capacitated ? tg::approx_tg_capacitated(view, oracle)
                                            : tg::approx_tg(view, oracle);
            return emit(solve_document(tg::to_double(report.grouping.profit), report.lp_bound,
                                       map_to_sources(report.grouping.assignments, expanded),
                                       "approx-tg", report.guarantee, report.iterations),
                        output_path);
        }
        if (algorithm == "rand-round" && capacitated) {
            std::cerr << "error: rand-round cannot honor task capacities; "
                         "use approx-tg or exact\n";
            return kExitMismatch;
        }

        const auto colgen = tg::column_generation(view, oracle);
        tg::Grouping grouping;
        if (algorithm == "cand1") {
            grouping = tg::candidate_one(
                view, colgen, capacitated ? tg::Rounder::Capacity : tg::Rounder::Deterministic);
        } else if (algorithm == "cand2") {
            grouping = tg::candidate_two(
                view, colgen, capacitated ? tg::Rounder::Capacity : tg::Rounder::Deterministic);
        } else {  // rand-round
            grouping = tg::randomized_round(
                view, tg::make_rounding_input(view, colgen.catalog, colgen.solution), seed);
        }
        return emit(solve_document(tg::to_double(grouping.profit), colgen.solution.objective,
                                   map_to_sources(grouping.assignments, expanded), algorithm,
                                   grouping.guarantee, colgen.iterations),
                    output_path);
    } catch (const tg::ScaleError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitValidation;
    }
}

int run_bound(const std::string& input, const std::string& pricing) {
    auto text = read_file(input);
    if (!text) {
        std::cerr << "error: cannot read " << input << "\n";
        return kExitParse;
    }
    tg::Instance inst;
    try {
        inst = tg::parse_instance(*text);
    } catch (const tg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    const auto oracle =
        pricing == "greedy" ? tg::PricingOracle::Greedy : tg::PricingOracle::Exact;
    if (oracle == tg::PricingOracle::Greedy &&
        inst.compatibility.mode != tg::CompatibilityMode::None) {
        std::cerr << "error: greedy pricing is only sound without a compatibility "
                     "constraint (mode \"none\")\n";
        return kExitMismatch;
    }
    try {
        const auto expanded = tg::expand_load_limits(inst);
        tg::InstanceView view(expanded);
        const auto result = tg::column_generation(view, oracle);
        const bool exact = oracle == tg::PricingOracle::Exact && !result.hit_column_cap;
        std::string doc = "{";
        doc += "\"lp_bound\": " + format_number(result.solution.objective);
        doc += ", \"columns\": " + std::to_string(result.catalog.size());
        doc += ", \"iterations\": " + std::to_string(result.iterations);
        doc += std::string(", \"exact\": ") + (exact ? "true" : "false");
        doc += "}";
        std::cout << doc << "\n";
        return 0;
    } catch (const tg::ScaleError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"profit-aware team grouping solver"};
    app.require_subcommand(1);

    std::string input;
    std::string algorithm = "approx-tg";
    std::string pricing = "exact";
    std::string output_path;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "check an instance file; exit 0 iff clean");
    validate->add_option("--input", input, "instance file")->required();

    auto* solve = app.add_subcommand("solve", "compute a grouping and print a JSON result");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--algorithm", algorithm, "approx-tg | exact | cand1 | cand2 | rand-round")
        ->check(CLI::IsMember({"approx-tg", "exact", "cand1", "cand2", "rand-round"}));
    solve->add_option("--pricing", pricing, "exact | greedy")
        ->check(CLI::IsMember({"exact", "greedy"}));
    solve->add_option("--seed", seed, "seed for rand-round");
    solve->add_option("--output", output_path, "write the result here instead of stdout");

    auto* bound = app.add_subcommand("bound", "print the LP bound document");
    bound->add_option("--input", input, "instance file")->required();
    bound->add_option("--pricing", pricing, "exact | greedy")
        ->check(CLI::IsMember({"exact", "greedy"}));

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        return run_validate(input);
    }
    if (solve->parsed()) {
        return run_solve(input, algorithm, pricing, seed, output_path);
    }
    return run_bound(input, pricing);
}
