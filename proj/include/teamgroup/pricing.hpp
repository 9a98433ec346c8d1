#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "teamgroup/teams.hpp"

namespace tg {

/// Dual prices: y per individual (load rows) and p per task (capacity rows).
/// An empty p means every capacity is unlimited, i.e. p(t) = 0 throughout.
struct PriceVector {
    std::vector<double> y;
    std::vector<double> p;

    double y_of(int individual) const { return y.empty() ? 0.0 : y[individual]; }
    double p_of(int task) const { return p.empty() ? 0.0 : p[task]; }
};

struct PricedTeam {
    Team team;
    double cost = 0.0;       // sum of member prices
    double guarantee = 1.0;  // oracle approximation factor (>= 1)
};

enum class PricingOracle { Exact, Greedy };

inline double team_cost(const PriceVector& prices, const Team& team) {
    double cost = 0.0;
    for (int m : team.members) {
        cost += prices.y_of(m);
    }
    return cost;
}

/// Minimum-cost qualified team for a task; ties resolved by canonical team
/// order. Searches the minimal teams only — with nonnegative prices every
/// qualified team contains a minimal one of no greater cost.
inline std::optional<PricedTeam> exact_min_cost_team(const InstanceView& view, int task,
                                                     const PriceVector& prices) {
    std::optional<PricedTeam> best;
    for (auto& team : enumerate_minimal_teams(view, task)) {
        const double cost = team_cost(prices, team);
        if (!best || cost < best->cost) {
            best = PricedTeam{std::move(team), cost, 1.0};
        }
    }
    return best;
}

/// Guarantee of the greedy oracle for a task requiring n' skills.
inline double greedy_guarantee(int required_skills) {
    return std::log(static_cast<double>(std::max(2, required_skills)));
}

/// Weighted-set-cover greedy: repeatedly take the individual with the best
/// price per newly covered required skill (ties by id), then drop members the
/// later picks made redundant, in reverse insertion order. Only defined when
/// the instance has no compatibility constraint.
inline std::optional<PricedTeam> greedy_set_cover_team(const InstanceView& view, int task,
                                                       const PriceVector& prices) {
    if (view.instance().compatibility.mode != CompatibilityMode::None) {
        throw std::invalid_argument(
            "greedy_set_cover_team requires compatibility mode \"none\"");
    }
    const std::uint64_t required = view.task_skills(task);
    if (required == 0) {
        return std::nullopt;
    }
    std::uint64_t covered = 0;
    std::uint64_t chosen_mask = 0;
    std::vector<int> chosen;  // insertion order
    while ((covered & required) != required) {
        int best = -1;
        double best_cost = 0.0;
        int best_new = 0;
        for (int i : view.individuals_by_id()) {
            if (chosen_mask & InstanceView::bit(i)) {
                continue;
            }
            const int fresh =
                std::popcount(view.individual_skills(i) & required & ~covered);
            if (fresh == 0) {
                continue;
            }
            const double cost = prices.y_of(i);
            // cost/fresh < best_cost/best_new, compared without division;
            // ties fall to the earlier id because of the iteration order.
            if (best < 0 || cost * best_new < best_cost * fresh) {
                best = i;
                best_cost = cost;
                best_new = fresh;
            }
        }
        if (best < 0) {
            return std::nullopt;  // required skills not coverable at all
        }
        chosen.push_back(best);
        chosen_mask |= InstanceView::bit(best);
        covered |= view.individual_skills(best);
    }

    // Redundancy prune, reverse insertion order.
    for (int i = static_cast<int>(chosen.size()) - 1; i >= 0; --i) {
        const std::uint64_t without = chosen_mask & ~InstanceView::bit(chosen[i]);
        if ((detail::mask_skills(view, without) & required) == required) {
            chosen_mask = without;
            chosen.erase(chosen.begin() + i);
        }
    }

    PricedTeam out;
    out.team = team_from_mask(chosen_mask);
    out.cost = team_cost(prices, out.team);
    out.guarantee = greedy_guarantee(std::popcount(required));
    return out;
}

inline std::optional<PricedTeam> run_oracle(const InstanceView& view, int task,
                                            const PriceVector& prices, PricingOracle oracle) {
    return oracle == PricingOracle::Exact ? exact_min_cost_team(view, task, prices)
                                          : greedy_set_cover_team(view, task, prices);
}

/// Oracle guarantee for result metadata: worst case over the instance's tasks.
inline double oracle_guarantee(const InstanceView& view, PricingOracle oracle) {
    if (oracle == PricingOracle::Exact) {
        return 1.0;
    }
    double mu = 1.0;
    for (int t = 0; t < view.num_tasks(); ++t) {
        mu = std::max(mu, greedy_guarantee(std::popcount(view.task_skills(t))));
    }
    return mu;
}

/// Absolute pricing tolerance: the configured value is relative to the
/// largest task profit.
inline double pricing_epsilon(const InstanceView& view, double normalized_eps) {
    return normalized_eps * view.max_profit();
}

/// Scans tasks in canonical order and returns the first column whose team
/// costs less than profit - p(task) - eps, i.e. a violated dual constraint.
/// The returned column's ordinal is a placeholder until a catalog adopts it.
inline std::optional<Column> find_violated_column(const InstanceView& view,
                                                  const PriceVector& prices,
                                                  PricingOracle oracle, double eps) {
    for (int t : view.tasks_by_id()) {
        const double threshold = to_double(view.task(t).profit) - prices.p_of(t) - eps;
        if (threshold <= 0.0) {
            continue;  // no nonnegative-cost team can violate this task's constraint
        }
        auto priced = run_oracle(view, t, prices, oracle);
        if (priced && priced->cost < threshold) {
            Column col;
            col.task = t;
            col.task_id = view.task(t).id;
            col.ordinal = 0;
            col.team = std::move(priced->team);
            col.profit = view.task(t).profit;
            return col;
        }
    }
    return std::nullopt;
}

}  // namespace tg
