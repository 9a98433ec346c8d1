#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamgroup/master_lp.hpp"
#include "teamgroup/teams.hpp"

namespace tg {

struct Assignment {
    std::string task_id;
    std::vector<std::string> members;  // ascending ids

    auto operator<=>(const Assignment&) const = default;
};

/// An integral grouping: disjoint-by-load team-to-task assignments.
struct Grouping {
    std::vector<Assignment> assignments;  // canonical order
    Rational profit{0};
    std::string method;
    int rho = 0;            // largest team size in the rounding input (0 when n/a)
    std::string guarantee;  // claimed ratio for this output
};

/// Columns plus their fractional values, the input to every rounder.
struct RoundingInput {
    std::vector<Column> columns;
    std::vector<double> values;
    int rho = 0;  // max team size over columns
};

namespace detail {

inline std::vector<int> canonical_column_order(const std::vector<Column>& columns) {
    std::vector<int> order(columns.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return column_key_less(columns[a], columns[b]); });
    return order;
}

inline Grouping build_grouping(const InstanceView& view, const std::vector<int>& selected,
                               const std::vector<Column>& columns, std::string method, int rho,
                               std::string guarantee) {
    Grouping g;
    g.method = std::move(method);
    g.rho = rho;
    g.guarantee = std::move(guarantee);
    for (int i : selected) {
        g.assignments.push_back({columns[i].task_id, member_ids(view, columns[i].team)});
        g.profit += columns[i].profit;
    }
    std::sort(g.assignments.begin(), g.assignments.end());
    return g;
}

// 53-bit uniform in [0, 1); pinned here so outputs do not depend on the
// standard library's distribution implementation.
inline double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace detail

/// Builds a rounding input from explicit columns and values: values are
/// clamped to [0,1] (rejected beyond 1e-6) and checked load-feasible.
inline RoundingInput make_rounding_input(const InstanceView& view, std::vector<Column> columns,
                                         std::vector<double> values) {
    if (columns.size() != values.size()) {
        throw std::invalid_argument("rounding input: column/value count mismatch");
    }
    RoundingInput input;
    input.columns = std::move(columns);
    input.values = std::move(values);
    for (auto& v : input.values) {
        if (v < -1e-6 || v > 1.0 + 1e-6) {
            throw std::invalid_argument("rounding input: value outside [0,1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    std::vector<double> load(view.num_individuals(), 0.0);
    for (std::size_t j = 0; j < input.columns.size(); ++j) {
        for (int member : input.columns[j].team.members) {
            load[member] += input.values[j];
        }
    }
    for (double l : load) {
        if (l > 1.0 + 1e-6) {
            throw std::invalid_argument("rounding input: per-individual mass exceeds 1");
        }
    }
    input.rho = 0;
    for (const auto& c : input.columns) {
        input.rho = std::max(input.rho, static_cast<int>(c.team.members.size()));
    }
    return input;
}

inline RoundingInput make_rounding_input(const InstanceView& view, const TeamCatalog& catalog,
                                         const FractionalSolution& solution) {
    return make_rounding_input(view, catalog.columns(), solution.values);
}

/// Two-phase randomized rounding: each column survives on its own with
/// probability x*/(2 rho), then a survivor is dropped when an adjacent
/// survivor carries a smaller canonical key. The kept columns are pairwise
/// disjoint, so the output is always load-feasible.
inline Grouping randomized_round(const InstanceView& view, const RoundingInput& input,
                                 std::uint64_t seed) {
    const auto order = detail::canonical_column_order(input.columns);
    const double rho = std::max(1, input.rho);
    std::mt19937_64 rng(seed);

    std::vector<int> survivors;  // in canonical order
    for (int i : order) {
        const double u = detail::next_uniform(rng);
        if (u < input.values[i] / (2.0 * rho)) {
            survivors.push_back(i);
        }
    }
    std::vector<int> kept;
    for (std::size_t a = 0; a < survivors.size(); ++a) {
        bool blocked = false;
        for (std::size_t b = 0; b < a && !blocked; ++b) {
            blocked = (input.columns[survivors[a]].team.mask &
                       input.columns[survivors[b]].team.mask) != 0;
        }
        if (!blocked) {
            kept.push_back(survivors[a]);
        }
    }
    return detail::build_grouping(view, kept, input.columns, "randomized-rounding", input.rho,
                                  "expected profit >= sum(x*.profit)/(4*rho)");
}

/// Greedy conflict-free selection in non-increasing profit order: take the
/// best remaining column, drop everything sharing a member, repeat. Output
/// profit is at least sum(x*.profit)/rho.
inline Grouping deterministic_round(const InstanceView& view, const RoundingInput& input) {
    std::vector<int> order(input.columns.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (input.columns[a].profit != input.columns[b].profit) {
            return input.columns[b].profit < input.columns[a].profit;
        }
        return column_key_less(input.columns[a], input.columns[b]);
    });

    std::vector<bool> alive(input.columns.size(), true);
    std::vector<int> selected;
    for (int i : order) {
        if (!alive[i]) {
            continue;
        }
        selected.push_back(i);
        alive[i] = false;
        for (std::size_t j = 0; j < input.columns.size(); ++j) {
            if (alive[j] &&
                (input.columns[j].team.mask & input.columns[i].team.mask) != 0) {
                alive[j] = false;
            }
        }
    }
    return detail::build_grouping(view, selected, input.columns, "deterministic-rounding",
                                  input.rho, "profit >= sum(x*.profit)/rho");
}

/// Capacity-aware deterministic rounding. After each selection the selected
/// column's value becomes 1 and other same-task values are reduced (ascending
/// value, then key, clamped at 0) until the task's total — counting every
/// earlier selection of that task — fits its capacity; reduced-to-zero
/// same-task columns leave the pool with the neighbors. Output profit is at
/// least sum(x*.profit)/(rho+1) and every task appears at most g_t times.
inline Grouping capacity_round(const InstanceView& view, const RoundingInput& input,
                               const std::vector<std::optional<long long>>& capacities) {
    if (static_cast<int>(capacities.size()) != view.num_tasks()) {
        throw std::invalid_argument("capacity_round: capacity list size mismatch");
    }
    std::vector<double> task_mass(view.num_tasks(), 0.0);
    for (std::size_t j = 0; j < input.columns.size(); ++j) {
        task_mass[input.columns[j].task] += input.values[j];
    }
    for (int t = 0; t < view.num_tasks(); ++t) {
        if (capacities[t] && task_mass[t] > static_cast<double>(*capacities[t]) + 1e-6) {
            throw std::invalid_argument("capacity_round: input mass exceeds a task capacity");
        }
    }

    std::vector<double> x = input.values;
    for (auto& v : x) {
        v = std::clamp(v, 0.0, 1.0);
    }
    std::vector<int> order(input.columns.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (input.columns[a].profit != input.columns[b].profit) {
            return input.columns[b].profit < input.columns[a].profit;
        }
        return column_key_less(input.columns[a], input.columns[b]);
    });

    std::vector<bool> alive(input.columns.size(), true);
    std::vector<int> selected_per_task(view.num_tasks(), 0);
    std::vector<int> selected;
    for (std::size_t next = 0; next < order.size(); ++next) {
        const int i = order[next];
        if (!alive[i]) {
            continue;
        }
        const int t = input.columns[i].task;
        selected.push_back(i);
        alive[i] = false;
        x[i] = 1.0;
        ++selected_per_task[t];

        if (capacities[t]) {
            const double allowed =
                static_cast<double>(*capacities[t]) - static_cast<double>(selected_per_task[t]);
            std::vector<int> same_task;
            double total = 0.0;
            for (std::size_t j = 0; j < input.columns.size(); ++j) {
                if (alive[j] && input.columns[j].task == t) {
                    same_task.push_back(static_cast<int>(j));
                    total += x[j];
                }
            }
            std::sort(same_task.begin(), same_task.end(), [&](int a, int b) {
                if (x[a] != x[b]) {
                    return x[a] < x[b];
                }
                return column_key_less(input.columns[a], input.columns[b]);
            });
            double excess = total - allowed;
            for (int j : same_task) {
                if (excess <= 1e-12) {
                    break;
                }
                const double cut = std::min(x[j], excess);
                x[j] -= cut;
                excess -= cut;
            }
            for (int j : same_task) {
                if (x[j] <= 1e-12) {
                    x[j] = 0.0;
                    alive[j] = false;
                }
            }
        }
        for (std::size_t j = 0; j < input.columns.size(); ++j) {
            if (alive[j] &&
                (input.columns[j].team.mask & input.columns[i].team.mask) != 0) {
                alive[j] = false;
            }
        }
    }
    return detail::build_grouping(view, selected, input.columns, "capacity-rounding", input.rho,
                                  "profit >= sum(x*.profit)/(rho+1)");
}

/// Convenience: capacities straight from the instance.
inline Grouping capacity_round(const InstanceView& view, const RoundingInput& input) {
    std::vector<std::optional<long long>> capacities;
    capacities.reserve(view.num_tasks());
    for (int t = 0; t < view.num_tasks(); ++t) {
        capacities.push_back(view.task(t).capacity);
    }
    return capacity_round(view, input, capacities);
}

}  // namespace tg
