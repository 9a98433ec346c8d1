#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "teamgroup/pricing.hpp"
#include "teamgroup/simplex.hpp"
#include "teamgroup/teams.hpp"

namespace tg {

/// Optimal basic solution of the restricted packing LP over a column set,
/// together with the dual prices certifying it.
struct FractionalSolution {
    std::vector<double> values;  // x* per catalog column, in catalog order
    double objective = 0.0;      // sum of x* times column profit
    PriceVector duals;
    std::vector<int> basis;  // final simplex basis, for reproducibility checks
};

struct ColGenConfig {
    int max_columns = 1000;
    double pricing_tolerance = 1e-7;  // relative to the largest task profit
    bool add_all_violated = false;    // one violated column per task per round
    SimplexConfig simplex;
};

struct ColGenResult {
    TeamCatalog catalog;
    FractionalSolution solution;
    int iterations = 0;           // LP solve / pricing rounds
    double oracle_guarantee = 1.0;
    bool hit_column_cap = false;
};

/// Maximize sum of x*profit over the catalog columns subject to one load row
/// per individual (<= 1), one capacity row per finite-capacity task, and an
/// explicit x <= 1 row per column.
inline FractionalSolution solve_restricted_lp(const InstanceView& view, const TeamCatalog& catalog,
                                              const SimplexConfig& config = {}) {
    const auto& columns = catalog.columns();
    const int m = view.num_individuals();
    const int n = static_cast<int>(columns.size());

    std::vector<int> capacity_row_of_task(view.num_tasks(), -1);
    std::vector<double> rhs;
    int rows = m;
    for (int i = 0; i < m; ++i) {
        rhs.push_back(1.0);
    }
    for (int t = 0; t < view.num_tasks(); ++t) {
        if (view.task(t).capacity) {
            capacity_row_of_task[t] = rows++;
            rhs.push_back(static_cast<double>(*view.task(t).capacity));
        }
    }
    const int first_bound_row = rows;
    rows += n;
    for (int j = 0; j < n; ++j) {
        rhs.push_back(1.0);
    }

    std::vector<std::vector<double>> a(rows, std::vector<double>(n, 0.0));
    std::vector<double> objective(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const auto& col = columns[j];
        for (int member : col.team.members) {
            a[member][j] = 1.0;
        }
        if (capacity_row_of_task[col.task] >= 0) {
            a[capacity_row_of_task[col.task]][j] = 1.0;
        }
        a[first_bound_row + j][j] = 1.0;
        objective[j] = to_double(col.profit);
    }

    auto lp = simplex_maximize(std::move(a), std::move(rhs), std::move(objective), config);
    if (lp.status != LpStatus::Optimal) {
        throw std::runtime_error("restricted LP did not reach an optimal basis");
    }

    FractionalSolution sol;
    sol.values.resize(n);
    for (int j = 0; j < n; ++j) {
        sol.values[j] = std::clamp(lp.x[j], 0.0, 1.0);
    }
    sol.duals.y.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        sol.duals.y[i] = std::max(0.0, lp.row_duals[i]);
    }
    sol.duals.p.assign(view.num_tasks(), 0.0);
    for (int t = 0; t < view.num_tasks(); ++t) {
        if (capacity_row_of_task[t] >= 0) {
            sol.duals.p[t] = std::max(0.0, lp.row_duals[capacity_row_of_task[t]]);
        }
    }
    // Fold any dual weight on an x <= 1 row into one member's price. A bound
    // row can only be tight when x_j = 1, which forces each member's load row
    // tight and every overlapping column to 0, so the shifted prices stay
    // dual-feasible and complementary; this keeps (y, p) a complete
    // certificate on its own.
    for (int j = 0; j < n; ++j) {
        const double q = std::max(0.0, lp.row_duals[first_bound_row + j]);
        if (q > 0.0) {
            int first = columns[j].team.members.front();
            for (int member : columns[j].team.members) {
                if (view.id_rank(member) < view.id_rank(first)) {
                    first = member;
                }
            }
            sol.duals.y[first] += q;
        }
    }
    sol.objective = 0.0;
    for (int j = 0; j < n; ++j) {
        sol.objective += sol.values[j] * to_double(columns[j].profit);
    }
    sol.basis = std::move(lp.basis);
    return sol;
}

/// Column generation on the restricted LP: solve, price with the chosen
/// oracle, add the violated column, repeat until no violation or the column
/// cap. Requires unit loads (run expand_load_limits first).
inline ColGenResult column_generation(const InstanceView& view, PricingOracle oracle,
                                      const ColGenConfig& config = {}) {
    if (!view.unit_loads()) {
        throw std::invalid_argument("column_generation requires unit loads; expand the instance");
    }
    const double eps = pricing_epsilon(view, config.pricing_tolerance);

    ColGenResult result;
    result.oracle_guarantee = oracle_guarantee(view, oracle);
    for (;;) {
        result.solution = solve_restricted_lp(view, result.catalog, config.simplex);
        ++result.iterations;

        if (config.add_all_violated) {
            int added = 0;
            for (int t : view.tasks_by_id()) {
                const double threshold =
                    to_double(view.task(t).profit) - result.solution.duals.p_of(t) - eps;
                if (threshold <= 0.0) {
                    continue;
                }
                auto priced = run_oracle(view, t, result.solution.duals, oracle);
                if (!priced || priced->cost >= threshold ||
                    result.catalog.contains(t, priced->team)) {
                    continue;
                }
                if (static_cast<int>(result.catalog.size()) >= config.max_columns) {
                    result.hit_column_cap = true;
                    return result;
                }
                result.catalog.add(view, t, std::move(priced->team));
                ++added;
            }
            if (added == 0) {
                return result;
            }
        } else {
            auto col = find_violated_column(view, result.solution.duals, oracle, eps);
            if (!col || result.catalog.contains(col->task, col->team)) {
                return result;
            }
            if (static_cast<int>(result.catalog.size()) >= config.max_columns) {
                result.hit_column_cap = true;
                return result;
            }
            result.catalog.add(view, col->task, std::move(col->team));
        }
    }
}

/// LP objective reached by exact-oracle column generation: a certified upper
/// bound on the best integral grouping of a unit-load instance.
inline double lp_upper_bound(const InstanceView& view, const ColGenConfig& config = {}) {
    return column_generation(view, PricingOracle::Exact, config).solution.objective;
}

}  // namespace tg
