#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "teamgroup/instance.hpp"

namespace tg {

struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense index-based view of an instance. All combinatorial routines work on
/// bitmasks over individual and skill indices, which caps both at 64; that is
/// far beyond the exhaustive-search sizes this library targets.
class InstanceView {
public:
    explicit InstanceView(const Instance& inst) : inst_(&inst) {
        if (inst.skills.size() > 64) {
            throw ScaleError("more than 64 skills");
        }
        if (inst.individuals.size() > 64) {
            throw ScaleError("more than 64 individuals");
        }
        for (std::size_t i = 0; i < inst.skills.size(); ++i) {
            skill_index_.emplace(inst.skills[i], static_cast<int>(i));
        }
        for (std::size_t i = 0; i < inst.individuals.size(); ++i) {
            individual_index_.emplace(inst.individuals[i].id, static_cast<int>(i));
        }
        for (std::size_t i = 0; i < inst.tasks.size(); ++i) {
            task_index_.emplace(inst.tasks[i].id, static_cast<int>(i));
        }

        individual_skills_.resize(inst.individuals.size(), 0);
        for (std::size_t i = 0; i < inst.individuals.size(); ++i) {
            for (const auto& s : inst.individuals[i].skills) {
                individual_skills_[i] |= bit(skill_index_.at(s));
            }
        }
        task_skills_.resize(inst.tasks.size(), 0);
        for (std::size_t i = 0; i < inst.tasks.size(); ++i) {
            for (const auto& s : inst.tasks[i].skills) {
                task_skills_[i] |= bit(skill_index_.at(s));
            }
        }
        adjacency_.resize(inst.individuals.size(), 0);
        for (const auto& [a, b] : inst.edges) {
            const int ia = individual_index_.at(a);
            const int ib = individual_index_.at(b);
            if (ia == ib) {
                continue;
            }
            adjacency_[ia] |= bit(ib);
            adjacency_[ib] |= bit(ia);
        }

        individuals_by_id_.resize(inst.individuals.size());
        for (std::size_t i = 0; i < individuals_by_id_.size(); ++i) {
            individuals_by_id_[i] = static_cast<int>(i);
        }
        std::sort(individuals_by_id_.begin(), individuals_by_id_.end(), [&](int a, int b) {
            return inst.individuals[a].id < inst.individuals[b].id;
        });
        id_rank_.resize(inst.individuals.size());
        for (std::size_t r = 0; r < individuals_by_id_.size(); ++r) {
            id_rank_[individuals_by_id_[r]] = static_cast<int>(r);
        }
        tasks_by_id_.resize(inst.tasks.size());
        for (std::size_t i = 0; i < tasks_by_id_.size(); ++i) {
            tasks_by_id_[i] = static_cast<int>(i);
        }
        std::sort(tasks_by_id_.begin(), tasks_by_id_.end(), [&](int a, int b) {
            return inst.tasks[a].id < inst.tasks[b].id;
        });

        max_profit_ = 0.0;
        for (const auto& t : inst.tasks) {
            max_profit_ = std::max(max_profit_, to_double(t.profit));
        }
    }

    static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    const Instance& instance() const { return *inst_; }
    int num_individuals() const { return static_cast<int>(inst_->individuals.size()); }
    int num_skills() const { return static_cast<int>(inst_->skills.size()); }
    int num_tasks() const { return static_cast<int>(inst_->tasks.size()); }

    std::uint64_t individual_skills(int i) const { return individual_skills_[i]; }
    std::uint64_t adjacency(int i) const { return adjacency_[i]; }
    std::uint64_t task_skills(int t) const { return task_skills_[t]; }
    const Task& task(int t) const { return inst_->tasks[t]; }
    const std::string& individual_id(int i) const { return inst_->individuals[i].id; }

    /// Individual indices in ascending id order (the canonical order).
    const std::vector<int>& individuals_by_id() const { return individuals_by_id_; }
    /// Task indices in ascending id order (the canonical order).
    const std::vector<int>& tasks_by_id() const { return tasks_by_id_; }
    int id_rank(int individual) const { return id_rank_[individual]; }

    int individual_index(const std::string& id) const {
        auto it = individual_index_.find(id);
        if (it == individual_index_.end()) {
            throw std::invalid_argument("unknown individual id: " + id);
        }
        return it->second;
    }
    int task_index(const std::string& id) const {
        auto it = task_index_.find(id);
        if (it == task_index_.end()) {
            throw std::invalid_argument("unknown task id: " + id);
        }
        return it->second;
    }

    bool unit_loads() const {
        for (const auto& u : inst_->individuals) {
            if (u.load != 1) return false;
        }
        return true;
    }
    bool has_finite_capacity() const {
        for (const auto& t : inst_->tasks) {
            if (t.capacity) return true;
        }
        return false;
    }
    long long total_load() const {
        long long sum = 0;
        for (const auto& u : inst_->individuals) {
            sum += u.load;
        }
        return sum;
    }
    double max_profit() const { return max_profit_; }

private:
    const Instance* inst_;
    std::unordered_map<std::string, int> skill_index_, individual_index_, task_index_;
    std::vector<std::uint64_t> individual_skills_, task_skills_, adjacency_;
    std::vector<int> individuals_by_id_, id_rank_, tasks_by_id_;
    double max_profit_ = 0.0;
};

struct Team {
    std::vector<int> members;  // ascending individual indices, never empty
    std::uint64_t mask = 0;

    bool operator==(const Team& other) const { return mask == other.mask; }
};

inline Team make_team(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Team t;
    t.mask = 0;
    for (int m : members) {
        t.mask |= InstanceView::bit(m);
    }
    t.members = std::move(members);
    return t;
}

inline Team team_from_mask(std::uint64_t mask) {
    Team t;
    t.mask = mask;
    while (mask) {
        const int i = std::countr_zero(mask);
        t.members.push_back(i);
        mask &= mask - 1;
    }
    return t;
}

inline Team team_from_ids(const InstanceView& view, const std::vector<std::string>& ids) {
    std::vector<int> members;
    members.reserve(ids.size());
    for (const auto& id : ids) {
        members.push_back(view.individual_index(id));
    }
    return make_team(std::move(members));
}

/// Member ids in ascending id order.
inline std::vector<std::string> member_ids(const InstanceView& view, const Team& team) {
    std::vector<std::string> ids;
    ids.reserve(team.members.size());
    for (int m : team.members) {
        ids.push_back(view.individual_id(m));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

/// Canonical team order: ascending size, then lexicographic member-id sequence.
inline bool team_less(const InstanceView& view, const Team& a, const Team& b) {
    if (a.members.size() != b.members.size()) {
        return a.members.size() < b.members.size();
    }
    auto ranks = [&](const Team& t) {
        std::vector<int> r;
        r.reserve(t.members.size());
        for (int m : t.members) {
            r.push_back(view.id_rank(m));
        }
        std::sort(r.begin(), r.end());
        return r;
    };
    return ranks(a) < ranks(b);
}

inline bool covers(const InstanceView& view, const Team& team, int task) {
    std::uint64_t skills = 0;
    for (int m : team.members) {
        skills |= view.individual_skills(m);
    }
    return (skills & view.task_skills(task)) == view.task_skills(task);
}

namespace detail {

inline std::uint64_t mask_skills(const InstanceView& view, std::uint64_t mask) {
    std::uint64_t skills = 0;
    while (mask) {
        skills |= view.individual_skills(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return skills;
}

inline bool induced_connected(const InstanceView& view, std::uint64_t mask) {
    if (mask == 0) {
        return true;
    }
    std::uint64_t reached = mask & -mask;  // lowest member as BFS seed
    for (;;) {
        std::uint64_t frontier = reached;
        std::uint64_t next = reached;
        while (frontier) {
            next |= view.adjacency(std::countr_zero(frontier)) & mask;
            frontier &= frontier - 1;
        }
        if (next == reached) {
            break;
        }
        reached = next;
    }
    return reached == mask;
}

/// Longest induced shortest-path distance between members; -1 if disconnected.
inline int induced_diameter(const InstanceView& view, std::uint64_t mask) {
    int diameter = 0;
    for (std::uint64_t seeds = mask; seeds; seeds &= seeds - 1) {
        const int start = std::countr_zero(seeds);
        std::uint64_t reached = InstanceView::bit(start);
        std::uint64_t frontier = reached;
        int depth = 0;
        while (reached != mask) {
            std::uint64_t next = 0;
            while (frontier) {
                next |= view.adjacency(std::countr_zero(frontier)) & mask;
                frontier &= frontier - 1;
            }
            next &= ~reached;
            if (next == 0) {
                return -1;
            }
            reached |= next;
            frontier = next;
            ++depth;
        }
        diameter = std::max(diameter, depth);
    }
    return diameter;
}

}  // namespace detail

inline bool compatible_mask(const InstanceView& view, std::uint64_t mask,
                            const Compatibility& compat) {
    switch (compat.mode) {
        case CompatibilityMode::None:
            return true;
        case CompatibilityMode::Connected:
            return detail::induced_connected(view, mask);
        case CompatibilityMode::Diameter: {
            const int d = detail::induced_diameter(view, mask);
            return d >= 0 && d <= compat.bound;
        }
    }
    return false;
}

inline bool compatible(const InstanceView& view, const Team& team, const Compatibility& compat) {
    return compatible_mask(view, team.mask, compat);
}

inline bool compatible(const InstanceView& view, const Team& team) {
    return compatible_mask(view, team.mask, view.instance().compatibility);
}

inline bool qualified_mask(const InstanceView& view, std::uint64_t mask, int task) {
    return (detail::mask_skills(view, mask) & view.task_skills(task)) == view.task_skills(task) &&
           compatible_mask(view, mask, view.instance().compatibility);
}

inline bool qualified(const InstanceView& view, const Team& team, int task) {
    return qualified_mask(view, team.mask, task);
}

/// True when no proper non-empty subset of `mask` is itself qualified. Checks
/// every subset: under connectivity, removing one member can disconnect the
/// team while a smaller qualified subset still exists, so single-removal
/// checks are not enough.
inline bool is_minimal_qualified(const InstanceView& view, std::uint64_t mask, int task) {
    if (!qualified_mask(view, mask, task)) {
        return false;
    }
    const std::uint64_t required = view.task_skills(task);
    for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        if ((detail::mask_skills(view, sub) & required) != required) {
            continue;
        }
        if (compatible_mask(view, sub, view.instance().compatibility)) {
            return false;
        }
    }
    return true;
}

/// All minimal qualified teams of a task, in canonical order. Exhaustive
/// subset search over the individuals; meant for the small instances this
/// library targets.
inline std::vector<Team> enumerate_minimal_teams(const InstanceView& view, int task) {
    const std::uint64_t required = view.task_skills(task);
    if (required == 0) {
        return {};  // a task requiring nothing has no meaningful teams
    }
    const int m = view.num_individuals();
    const auto& order = view.individuals_by_id();

    // suffix_skills[p] = union of skills available from order[p..m)
    std::vector<std::uint64_t> suffix_skills(m + 1, 0);
    for (int p = m - 1; p >= 0; --p) {
        suffix_skills[p] = suffix_skills[p + 1] | view.individual_skills(order[p]);
    }

    std::vector<Team> result;
    // Depth-first over subsets in canonical insertion order. At a qualified
    // set we stop extending: every proper superset has a qualified subset and
    // cannot be minimal. A covering but incompatible set must still be
    // extended, because added members can restore connectivity.
    auto dfs = [&](auto&& self, int pos, std::uint64_t mask, std::uint64_t skills) -> void {
        if ((skills & required) == required &&
            compatible_mask(view, mask, view.instance().compatibility)) {
            if (is_minimal_qualified(view, mask, task)) {
                result.push_back(team_from_mask(mask));
            }
            return;
        }
        for (int p = pos; p < m; ++p) {
            if ((skills | suffix_skills[p] | required) != (skills | suffix_skills[p])) {
                break;  // remaining pool can no longer complete coverage
            }
            const int member = order[p];
            self(self, p + 1, mask | InstanceView::bit(member),
                 skills | view.individual_skills(member));
        }
    };
    dfs(dfs, 0, 0, 0);

    std::sort(result.begin(), result.end(),
              [&](const Team& a, const Team& b) { return team_less(view, a, b); });
    return result;
}

inline std::vector<Team> enumerate_minimal_teams(const InstanceView& view,
                                                 const std::string& task_id) {
    return enumerate_minimal_teams(view, view.task_index(task_id));
}

/// Size of the largest minimal qualified team over all tasks (0 if none).
inline int largest_minimal_team_size(const InstanceView& view) {
    int best = 0;
    for (int t = 0; t < view.num_tasks(); ++t) {
        for (const auto& team : enumerate_minimal_teams(view, t)) {
            best = std::max(best, static_cast<int>(team.members.size()));
        }
    }
    return best;
}

struct ColumnKey {
    std::string task_id;
    int ordinal = 0;

    auto operator<=>(const ColumnKey&) const = default;
};

/// One LP variable: a qualified team bound to a task.
struct Column {
    int task = -1;
    std::string task_id;
    int ordinal = 0;  // assigned by the owning catalog, unique per task
    Team team;
    Rational profit{0};

    ColumnKey key() const { return {task_id, ordinal}; }
};

inline bool column_key_less(const Column& a, const Column& b) {
    return a.key() < b.key();
}

/// Column container. Ordinals are per-task insertion counters, so the
/// canonical column order (task id, ordinal) is reproducible.
class TeamCatalog {
public:
    const std::vector<Column>& columns() const { return columns_; }
    std::size_t size() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }

    const Column& add(const InstanceView& view, int task, Team team) {
        if (team.members.empty()) {
            throw std::invalid_argument("catalog rejects empty team");
        }
        Column col;
        col.task = task;
        col.task_id = view.task(task).id;
        col.ordinal = next_ordinal_[task]++;
        col.team = std::move(team);
        col.profit = view.task(task).profit;
        max_team_size_ = std::max(max_team_size_, static_cast<int>(col.team.members.size()));
        columns_.push_back(std::move(col));
        return columns_.back();
    }

    bool contains(int task, const Team& team) const {
        for (const auto& c : columns_) {
            if (c.task == task && c.team.mask == team.mask) {
                return true;
            }
        }
        return false;
    }

    /// Max team size over the stored columns (0 when empty).
    int max_team_size() const { return max_team_size_; }

    /// Indices of all other columns sharing at least one member with column i.
    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            if (static_cast<int>(j) != i && (columns_[j].team.mask & columns_[i].team.mask) != 0) {
                out.push_back(static_cast<int>(j));
            }
        }
        return out;
    }

    /// Column indices sorted by canonical key (task id, ordinal).
    std::vector<int> canonical_order() const {
        std::vector<int> order(columns_.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = static_cast<int>(i);
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return column_key_less(columns_[a], columns_[b]); });
        return order;
    }

private:
    std::vector<Column> columns_;
    std::unordered_map<int, int> next_ordinal_;
    int max_team_size_ = 0;
};

/// Catalog of every minimal qualified team of every task, in canonical order.
inline TeamCatalog enumerate_full_catalog(const InstanceView& view) {
    TeamCatalog catalog;
    for (int t : view.tasks_by_id()) {
        for (auto& team : enumerate_minimal_teams(view, t)) {
            catalog.add(view, t, std::move(team));
        }
    }
    return catalog;
}

}  // namespace tg
