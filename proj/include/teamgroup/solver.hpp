#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamgroup/master_lp.hpp"
#include "teamgroup/rounding.hpp"

namespace tg {

struct SolveReport {
    Grouping grouping;
    double lp_bound = 0.0;
    bool lp_bound_exact = false;  // true upper bound (exact pricing, no column cap)
    int catalog_size = 0;
    int iterations = 0;
    bool hit_column_cap = false;
    std::string candidate_chosen = "I";
    double mu = 1.0;
    int delta_catalog = 0;  // largest team among generated columns
    int delta_minimal = 0;  // largest minimal qualified team over all tasks
    int num_individuals = 0;
    std::string guarantee;
};

enum class Rounder { Deterministic, Capacity };

namespace detail {

inline Grouping round_with(const InstanceView& view, const RoundingInput& input, Rounder rounder) {
    return rounder == Rounder::Capacity ? capacity_round(view, input)
                                        : deterministic_round(view, input);
}

}  // namespace detail

/// Candidate I: round the whole generated column set.
inline Grouping candidate_one(const InstanceView& view, const ColGenResult& colgen,
                              Rounder rounder = Rounder::Deterministic) {
    return detail::round_with(view, make_rounding_input(view, colgen.catalog, colgen.solution),
                              rounder);
}

/// Candidate II: split the columns by team size at sqrt(m) — |C|^2 <= m keeps
/// the comparison in integers — round the small-team side, and weigh it
/// against the single highest-profit big-team column.
inline Grouping candidate_two(const InstanceView& view, const ColGenResult& colgen,
                              Rounder rounder = Rounder::Deterministic) {
    const long long m = view.num_individuals();
    const auto& columns = colgen.catalog.columns();

    std::vector<Column> small_columns;
    std::vector<double> small_values;
    int best_large = -1;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const long long size = static_cast<long long>(columns[j].team.members.size());
        if (size * size <= m) {
            small_columns.push_back(columns[j]);
            small_values.push_back(colgen.solution.values[j]);
        } else if (best_large < 0 || columns[best_large].profit < columns[j].profit ||
                   (columns[best_large].profit == columns[j].profit &&
                    column_key_less(columns[j], columns[best_large]))) {
            best_large = static_cast<int>(j);
        }
    }

    Grouping rounded = detail::round_with(
        view, make_rounding_input(view, std::move(small_columns), std::move(small_values)),
        rounder);
    if (best_large < 0) {
        return rounded;
    }
    Grouping single = detail::build_grouping(
        view, {best_large}, columns, "highest-profit-column",
        static_cast<int>(columns[best_large].team.members.size()), "single best column");
    return rounded.profit >= single.profit ? rounded : single;
}

namespace detail {

inline std::string format_guarantee(double mu, int delta, long long m, bool capacitated) {
    const double d = static_cast<double>(std::max(1, delta));
    const double root = std::sqrt(static_cast<double>(m));
    const double ratio = capacitated
                             ? std::max(1.0 / (mu * (d + 1.0)), 1.0 / (2.0 * mu * (root + 1.0)))
                             : std::max(1.0 / (mu * d), 1.0 / (2.0 * mu * root));
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  capacitated
                      ? "profit >= max{1/(mu*(Delta+1)), 1/(2*mu*(sqrt(m)+1))} * OPT = %.9g "
                        "(mu=%.9g, Delta=%d, m=%lld)"
                      : "profit >= max{1/(mu*Delta), 1/(2*mu*sqrt(m))} * OPT = %.9g "
                        "(mu=%.9g, Delta=%d, m=%lld)",
                  ratio, mu, delta, m);
    return buf;
}

inline SolveReport best_of_candidates(const InstanceView& view, ColGenResult colgen,
                                      PricingOracle oracle, Rounder rounder, bool capacitated) {
    Grouping one = candidate_one(view, colgen, rounder);
    Grouping two = candidate_two(view, colgen, rounder);

    SolveReport report;
    report.candidate_chosen = one.profit >= two.profit ? "I" : "II";
    report.grouping = report.candidate_chosen == "I" ? std::move(one) : std::move(two);
    report.lp_bound = colgen.solution.objective;
    report.lp_bound_exact = oracle == PricingOracle::Exact && !colgen.hit_column_cap;
    report.catalog_size = static_cast<int>(colgen.catalog.size());
    report.iterations = colgen.iterations;
    report.hit_column_cap = colgen.hit_column_cap;
    report.mu = colgen.oracle_guarantee;
    report.delta_catalog = colgen.catalog.max_team_size();
    report.delta_minimal = largest_minimal_team_size(view);
    report.num_individuals = view.num_individuals();
    report.guarantee = format_guarantee(report.mu, report.delta_catalog,
                                        report.num_individuals, capacitated);
    return report;
}

}  // namespace detail

/// Full pipeline for unit-load, uncapacitated instances: one column-generation
/// run feeds both candidates; the better grouping wins.
inline SolveReport approx_tg(const InstanceView& view, PricingOracle oracle,
                             const ColGenConfig& config = {}) {
    if (view.has_finite_capacity()) {
        throw std::invalid_argument("approx_tg expects unlimited capacities; "
                                    "use approx_tg_capacitated");
    }
    return detail::best_of_candidates(view, column_generation(view, oracle, config), oracle,
                                      Rounder::Deterministic, false);
}

/// Capacity-aware pipeline: the LP carries capacity rows (pricing threshold
/// profit - p(t)), and both candidates round with capacity_round.
inline SolveReport approx_tg_capacitated(const InstanceView& view, PricingOracle oracle,
                                         const ColGenConfig& config = {}) {
    return detail::best_of_candidates(view, column_generation(view, oracle, config), oracle,
                                      Rounder::Capacity, true);
}

}  // namespace tg
