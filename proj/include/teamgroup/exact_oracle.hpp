#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "teamgroup/pricing.hpp"
#include "teamgroup/rounding.hpp"
#include "teamgroup/teams.hpp"

namespace tg {

/// Exhaustive search refuses instances beyond these sizes.
struct ScaleLimits {
    long long max_total_load = 16;
    int max_tasks = 8;
    int max_individuals = 15;
};

/// Optimal integral grouping by depth-first search over all minimal qualified
/// columns, honoring per-individual loads and per-task capacities. A column
/// may be taken several times when loads and capacity allow: an individual
/// with load f may serve the same task in f separate engagements, exactly as
/// the f copies in the expanded instance can. Ground truth for the
/// approximation pipeline; ties go to the first grouping in canonical
/// key-sequence order.
inline Grouping brute_force_optimal(const InstanceView& view, const ScaleLimits& limits = {}) {
    if (view.total_load() > limits.max_total_load) {
        throw ScaleError("brute_force_optimal: total load beyond the exhaustive-search limit");
    }
    if (view.num_tasks() > limits.max_tasks) {
        throw ScaleError("brute_force_optimal: too many tasks for exhaustive search");
    }
    if (view.num_individuals() > limits.max_individuals) {
        throw ScaleError("brute_force_optimal: too many individuals for exhaustive search");
    }

    TeamCatalog catalog;
    for (int t : view.tasks_by_id()) {
        if (view.task(t).profit == Rational(0)) {
            continue;  // zero-profit assignments never change the objective
        }
        for (auto& team : enumerate_minimal_teams(view, t)) {
            catalog.add(view, t, std::move(team));
        }
    }
    const auto& columns = catalog.columns();
    const int n = static_cast<int>(columns.size());

    const long long total_load = view.total_load();
    // suffix_bound[i]: the most profit columns i.. can still add. A column's
    // multiplicity is capped by its task capacity and its least-loaded
    // member; per-task capacity sharing is deliberately over-counted.
    std::vector<Rational> suffix_bound(n + 1, Rational(0));
    for (int i = n - 1; i >= 0; --i) {
        const auto& col = columns[i];
        long long mult = view.task(col.task).capacity ? *view.task(col.task).capacity
                                                      : total_load;
        for (int member : col.team.members) {
            mult = std::min(mult, view.instance().individuals[member].load);
        }
        suffix_bound[i] = suffix_bound[i + 1] + col.profit * mult;
    }

    std::vector<long long> load_left(view.num_individuals());
    for (int i = 0; i < view.num_individuals(); ++i) {
        load_left[i] = view.instance().individuals[i].load;
    }
    std::vector<long long> cap_left(view.num_tasks());
    for (int t = 0; t < view.num_tasks(); ++t) {
        cap_left[t] = view.task(t).capacity ? *view.task(t).capacity : total_load;
    }

    Rational best_profit(0);
    std::vector<int> best_selection;
    std::vector<int> chosen;
    // Candidate multisets are visited in lexicographic order of their
    // non-decreasing index sequences, so the first optimum found is the
    // canonical one. Recursing at j (not j+1) permits repeat selections.
    auto dfs = [&](auto&& self, int pos, Rational profit) -> void {
        if (profit > best_profit) {
            best_profit = profit;
            best_selection = chosen;
        }
        for (int j = pos; j < n; ++j) {
            if (profit + suffix_bound[j] < best_profit) {
                break;
            }
            const auto& col = columns[j];
            if (cap_left[col.task] < 1) {
                continue;
            }
            bool fits = true;
            for (int member : col.team.members) {
                if (load_left[member] < 1) {
                    fits = false;
                    break;
                }
            }
            if (!fits) {
                continue;
            }
            for (int member : col.team.members) {
                --load_left[member];
            }
            --cap_left[col.task];
            chosen.push_back(j);
            self(self, j, profit + col.profit);
            chosen.pop_back();
            ++cap_left[col.task];
            for (int member : col.team.members) {
                ++load_left[member];
            }
        }
    };
    dfs(dfs, 0, Rational(0));

    return detail::build_grouping(view, best_selection, columns, "exhaustive-search", 0,
                                  "optimal");
}

/// Reference oracle: full scan over all 2^m member subsets. Agrees with
/// exact_min_cost_team on cost; the team itself may differ under cost ties.
inline std::optional<PricedTeam> brute_force_min_cost_team(const InstanceView& view, int task,
                                                           const PriceVector& prices,
                                                           const ScaleLimits& limits = {}) {
    const int m = view.num_individuals();
    if (m > limits.max_individuals) {
        throw ScaleError("brute_force_min_cost_team: too many individuals for a full scan");
    }
    std::optional<PricedTeam> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (!qualified_mask(view, mask, task)) {
            continue;
        }
        Team team = team_from_mask(mask);
        const double cost = team_cost(prices, team);
        if (!best || cost < best->cost ||
            (cost == best->cost && team_less(view, team, best->team))) {
            best = PricedTeam{std::move(team), cost, 1.0};
        }
    }
    return best;
}

}  // namespace tg
