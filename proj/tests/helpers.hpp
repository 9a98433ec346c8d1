#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "teamgroup/teamgroup.hpp"

namespace tgtest {

// Three web developers a/b/c and three tasks; the two graphs differ in
// whether c is reachable. The classic smoke instance for this problem.
inline tg::Instance webdev_instance(bool chain) {
    tg::Instance inst;
    inst.skills = {"HTML", "MySQL", "JavaScript", "PHP"};
    inst.individuals = {
        {"a", {"HTML", "MySQL"}, 1},
        {"b", {"JavaScript"}, 1},
        {"c", {"HTML", "PHP"}, 1},
    };
    inst.edges = {{"a", "b"}};
    if (chain) {
        inst.edges.emplace_back("b", "c");
    }
    inst.tasks = {
        {"t1", {"HTML", "MySQL", "JavaScript", "PHP"}, tg::Rational(50), std::nullopt},
        {"t2", {"JavaScript", "HTML"}, tg::Rational(10), std::nullopt},
        {"t3", {"PHP"}, tg::Rational(5), std::nullopt},
    };
    inst.compatibility = {tg::CompatibilityMode::Connected, 1};
    return inst;
}

struct GenParams {
    int min_individuals = 2;
    int max_individuals = 5;
    int max_load = 1;
    long long total_load_cap = 8;
    int min_skills = 2;
    int max_skills = 5;
    int max_tasks = 4;
    double edge_probability = 0.5;
    bool capacitated = false;    // finite capacity in {1,2} on every task
    double zero_profit_rate = 0.08;
};

inline int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

/// Seeded random instance; `index` cycles the compatibility mode so a batch
/// covers none / connected / diameter evenly.
inline tg::Instance random_instance(std::mt19937_64& rng, int index, const GenParams& p = {}) {
    tg::Instance inst;
    const int n = draw(rng, p.min_skills, p.max_skills);
    for (int s = 0; s < n; ++s) {
        inst.skills.push_back("s" + std::to_string(s + 1));
    }

    const int m = draw(rng, p.min_individuals, p.max_individuals);
    long long total_load = 0;
    for (int i = 0; i < m; ++i) {
        tg::Individual u;
        u.id = "u" + std::to_string(i + 1);
        const int nskills = draw(rng, 1, std::min(3, n));
        while (static_cast<int>(u.skills.size()) < nskills) {
            std::string s = inst.skills[draw(rng, 0, n - 1)];
            if (std::find(u.skills.begin(), u.skills.end(), s) == u.skills.end()) {
                u.skills.push_back(s);
            }
        }
        u.load = draw(rng, 1, p.max_load);
        if (total_load + u.load > p.total_load_cap) {
            u.load = 1;
        }
        total_load += u.load;
        inst.individuals.push_back(std::move(u));
    }

    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (draw_unit(rng) < p.edge_probability) {
                inst.edges.emplace_back(inst.individuals[i].id, inst.individuals[j].id);
            }
        }
    }

    const int k = draw(rng, 1, p.max_tasks);
    for (int t = 0; t < k; ++t) {
        tg::Task task;
        task.id = "t" + std::to_string(t + 1);
        const int nreq = draw(rng, 1, std::min(3, n));
        while (static_cast<int>(task.skills.size()) < nreq) {
            std::string s = inst.skills[draw(rng, 0, n - 1)];
            if (std::find(task.skills.begin(), task.skills.end(), s) == task.skills.end()) {
                task.skills.push_back(s);
            }
        }
        task.profit = draw_unit(rng) < p.zero_profit_rate ? tg::Rational(0)
                                                          : tg::Rational(draw(rng, 1, 30));
        if (p.capacitated) {
            task.capacity = draw(rng, 1, 2);
        }
        inst.tasks.push_back(std::move(task));
    }

    switch (index % 3) {
        case 0:
            inst.compatibility = {tg::CompatibilityMode::None, 1};
            break;
        case 1:
            inst.compatibility = {tg::CompatibilityMode::Connected, 1};
            break;
        default:
            inst.compatibility = {tg::CompatibilityMode::Diameter, draw(rng, 1, 3)};
            break;
    }
    return inst;
}

/// Every qualified team of a task by full subset scan — the definitional
/// reference, independent of the pruned enumeration in the library.
inline std::vector<tg::Team> reference_qualified_teams(const tg::InstanceView& view, int task) {
    std::vector<tg::Team> out;
    const int m = view.num_individuals();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (tg::qualified_mask(view, mask, task)) {
            out.push_back(tg::team_from_mask(mask));
        }
    }
    return out;
}

/// Minimal qualified teams by filtering the full scan against the definition.
inline std::vector<tg::Team> reference_minimal_teams(const tg::InstanceView& view, int task) {
    const auto all = reference_qualified_teams(view, task);
    std::vector<tg::Team> out;
    for (const auto& team : all) {
        bool minimal = true;
        for (const auto& other : all) {
            if (other.mask != team.mask && (other.mask & team.mask) == other.mask) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(team);
        }
    }
    std::sort(out.begin(), out.end(), [&](const tg::Team& a, const tg::Team& b) {
        return tg::team_less(view, a, b);
    });
    return out;
}

/// Optimal profit over ALL qualified teams (not just minimal ones), honoring
/// loads and capacities; columns may repeat while loads and capacity permit.
/// Exponential; keep to very small instances.
inline tg::Rational reference_optimal_all_qualified(const tg::InstanceView& view) {
    struct Col {
        int task;
        std::uint64_t mask;
        tg::Rational profit;
    };
    std::vector<Col> cols;
    for (int t = 0; t < view.num_tasks(); ++t) {
        if (view.task(t).profit == tg::Rational(0)) {
            continue;
        }
        for (const auto& team : reference_qualified_teams(view, t)) {
            cols.push_back({t, team.mask, view.task(t).profit});
        }
    }
    std::vector<long long> load_left(view.num_individuals());
    for (int i = 0; i < view.num_individuals(); ++i) {
        load_left[i] = view.instance().individuals[i].load;
    }
    std::vector<long long> cap_left(view.num_tasks());
    for (int t = 0; t < view.num_tasks(); ++t) {
        cap_left[t] = view.task(t).capacity ? *view.task(t).capacity : view.total_load();
    }
    tg::Rational best(0);
    auto dfs = [&](auto&& self, std::size_t pos, tg::Rational profit) -> void {
        best = std::max(best, profit);
        for (std::size_t j = pos; j < cols.size(); ++j) {
            if (cap_left[cols[j].task] < 1) {
                continue;
            }
            bool fits = true;
            for (std::uint64_t rest = cols[j].mask; rest; rest &= rest - 1) {
                if (load_left[std::countr_zero(rest)] < 1) {
                    fits = false;
                    break;
                }
            }
            if (!fits) {
                continue;
            }
            for (std::uint64_t rest = cols[j].mask; rest; rest &= rest - 1) {
                --load_left[std::countr_zero(rest)];
            }
            --cap_left[cols[j].task];
            self(self, j, profit + cols[j].profit);  // repeats allowed
            ++cap_left[cols[j].task];
            for (std::uint64_t rest = cols[j].mask; rest; rest &= rest - 1) {
                ++load_left[std::countr_zero(rest)];
            }
        }
    };
    dfs(dfs, 0, tg::Rational(0));
    return best;
}

/// Empty string when the grouping is feasible for the instance; otherwise a
/// description of the first violated requirement.
inline std::string check_grouping_feasible(const tg::InstanceView& view,
                                           const tg::Grouping& grouping) {
    std::map<std::string, long long> uses;
    std::map<std::string, long long> task_count;
    tg::Rational total(0);
    for (const auto& a : grouping.assignments) {
        const int t = view.task_index(a.task_id);
        tg::Team team = tg::team_from_ids(view, a.members);
        if (team.members.size() != a.members.size()) {
            return "duplicate member inside an assignment for " + a.task_id;
        }
        if (!tg::qualified(view, team, t)) {
            return "unqualified team assigned to " + a.task_id;
        }
        for (const auto& id : a.members) {
            ++uses[id];
        }
        ++task_count[a.task_id];
        total += view.task(t).profit;
    }
    for (const auto& [id, count] : uses) {
        if (count > view.instance().individuals[view.individual_index(id)].load) {
            return "individual " + id + " overloaded";
        }
    }
    for (const auto& [id, count] : task_count) {
        const auto& cap = view.task(view.task_index(id)).capacity;
        if (cap && count > *cap) {
            return "task " + id + " over capacity";
        }
    }
    if (total != grouping.profit) {
        return "stored profit does not match the assignments";
    }
    return "";
}

/// Restricted LP over the complete minimal-team catalog.
inline double full_enumeration_lp_value(const tg::InstanceView& view) {
    return tg::solve_restricted_lp(view, tg::enumerate_full_catalog(view)).objective;
}

inline tg::Instance strip_capacities(tg::Instance inst) {
    for (auto& t : inst.tasks) {
        t.capacity.reset();
    }
    return inst;
}

}  // namespace tgtest
