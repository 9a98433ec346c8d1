#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using tg::CompatibilityMode;
using tg::InstanceView;
using tg::Team;

namespace {

std::vector<std::vector<std::string>> id_lists(const InstanceView& view,
                                               const std::vector<Team>& teams) {
    std::vector<std::vector<std::string>> out;
    for (const auto& t : teams) {
        out.push_back(tg::member_ids(view, t));
    }
    return out;
}

}  // namespace

TEST(Covers, WebdevTasks) {
    const auto inst = tgtest::webdev_instance(true);
    InstanceView view(inst);
    EXPECT_TRUE(tg::covers(view, tg::team_from_ids(view, {"a", "b"}), view.task_index("t2")));
    EXPECT_FALSE(tg::covers(view, tg::team_from_ids(view, {"b"}), view.task_index("t2")));
    EXPECT_TRUE(tg::covers(view, tg::team_from_ids(view, {"a", "b", "c"}), view.task_index("t1")));
}

TEST(Compatible, IsolatedSingletonIsConnected) {
    const auto inst = tgtest::webdev_instance(false);  // c has no edges
    InstanceView view(inst);
    EXPECT_TRUE(tg::compatible(view, tg::team_from_ids(view, {"c"})));
    EXPECT_FALSE(tg::compatible(view, tg::team_from_ids(view, {"a", "c"})));
}

TEST(Compatible, DiameterOnPath) {
    auto inst = tgtest::webdev_instance(true);  // path a - b - c
    InstanceView view(inst);
    const Team abc = tg::team_from_ids(view, {"a", "b", "c"});
    EXPECT_FALSE(tg::compatible(view, abc, {CompatibilityMode::Diameter, 1}));
    EXPECT_TRUE(tg::compatible(view, abc, {CompatibilityMode::Diameter, 2}));
    // diameter is measured inside the induced subgraph: dropping b cuts the path
    EXPECT_FALSE(tg::compatible(view, tg::team_from_ids(view, {"a", "c"}),
                                {CompatibilityMode::Diameter, 2}));
}

TEST(Compatible, NoneAcceptsEverything) {
    const auto inst = tgtest::webdev_instance(false);
    InstanceView view(inst);
    const tg::Compatibility none{CompatibilityMode::None, 1};
    EXPECT_TRUE(tg::compatible(view, tg::team_from_ids(view, {"a", "c"}), none));
    EXPECT_TRUE(tg::compatible(view, tg::team_from_ids(view, {"a", "b", "c"}), none));
}

TEST(EnumerateMinimalTeams, WebdevChain) {
    const auto inst = tgtest::webdev_instance(true);
    InstanceView view(inst);
    EXPECT_EQ(id_lists(view, tg::enumerate_minimal_teams(view, "t1")),
              (std::vector<std::vector<std::string>>{{"a", "b", "c"}}));
    EXPECT_EQ(id_lists(view, tg::enumerate_minimal_teams(view, "t2")),
              (std::vector<std::vector<std::string>>{{"a", "b"}, {"b", "c"}}));
    EXPECT_EQ(id_lists(view, tg::enumerate_minimal_teams(view, "t3")),
              (std::vector<std::vector<std::string>>{{"c"}}));
}

TEST(EnumerateMinimalTeams, WebdevSparseHasNoTeamForT1) {
    const auto inst = tgtest::webdev_instance(false);
    InstanceView view(inst);
    EXPECT_TRUE(tg::enumerate_minimal_teams(view, "t1").empty());
}

// A relay member with no required skill can be essential under connectivity;
// supersets of a covering-but-disconnected set must still be explored.
TEST(EnumerateMinimalTeams, KeepsConnectorMembers) {
    tg::Instance inst;
    inst.skills = {"x", "y"};
    inst.individuals = {{"left", {"x"}, 1}, {"mid", {}, 1}, {"right", {"y"}, 1}};
    inst.edges = {{"left", "mid"}, {"mid", "right"}};
    inst.tasks = {{"t", {"x", "y"}, tg::Rational(1), std::nullopt}};
    inst.compatibility = {CompatibilityMode::Connected, 1};
    InstanceView view(inst);
    EXPECT_EQ(id_lists(view, tg::enumerate_minimal_teams(view, "t")),
              (std::vector<std::vector<std::string>>{{"left", "mid", "right"}}));
}

TEST(EnumerateMinimalTeams, MatchesDefinitionOnRandomInstances) {
    std::mt19937_64 rng(411);
    tgtest::GenParams params;
    params.max_individuals = 8;
    params.total_load_cap = 8;
    for (int i = 0; i < 90; ++i) {
        const tg::Instance inst = tgtest::random_instance(rng, i, params);
        InstanceView view(inst);
        for (int t = 0; t < view.num_tasks(); ++t) {
            const auto expected = tgtest::reference_minimal_teams(view, t);
            const auto got = tg::enumerate_minimal_teams(view, t);
            ASSERT_EQ(got.size(), expected.size()) << "instance " << i << " task " << t;
            for (std::size_t j = 0; j < got.size(); ++j) {
                ASSERT_EQ(got[j].mask, expected[j].mask) << "instance " << i << " task " << t;
            }
        }
    }
}

TEST(EnumerateMinimalTeams, EveryProperSubsetIsUnqualified) {
    std::mt19937_64 rng(412);
    tgtest::GenParams params;
    params.max_individuals = 6;
    for (int i = 0; i < 60; ++i) {
        const tg::Instance inst = tgtest::random_instance(rng, i, params);
        InstanceView view(inst);
        for (int t = 0; t < view.num_tasks(); ++t) {
            for (const auto& team : tg::enumerate_minimal_teams(view, t)) {
                ASSERT_TRUE(tg::qualified(view, team, t));
                for (std::uint64_t sub = (team.mask - 1) & team.mask; sub;
                     sub = (sub - 1) & team.mask) {
                    ASSERT_FALSE(tg::qualified_mask(view, sub, t))
                        << "qualified proper subset, instance " << i;
                }
            }
        }
    }
}

TEST(EnumerateMinimalTeams, DiameterWithGenerousBoundMatchesConnected) {
    std::mt19937_64 rng(413);
    tgtest::GenParams params;
    params.max_individuals = 6;
    for (int i = 0; i < 40; ++i) {
        tg::Instance inst = tgtest::random_instance(rng, i, params);
        inst.compatibility = {CompatibilityMode::Connected, 1};
        const InstanceView connected_view(inst);
        tg::Instance loose = inst;
        loose.compatibility = {CompatibilityMode::Diameter,
                               static_cast<long long>(inst.individuals.size())};
        const InstanceView loose_view(loose);
        for (int t = 0; t < connected_view.num_tasks(); ++t) {
            const auto a = tg::enumerate_minimal_teams(connected_view, t);
            const auto b = tg::enumerate_minimal_teams(loose_view, t);
            ASSERT_EQ(a.size(), b.size());
            for (std::size_t j = 0; j < a.size(); ++j) {
                ASSERT_EQ(a[j].mask, b[j].mask);
            }
        }
    }
}

TEST(TeamCatalog, DeltaTracksLargestTeam) {
    const auto inst = tgtest::webdev_instance(true);
    InstanceView view(inst);
    const auto catalog = tg::enumerate_full_catalog(view);
    EXPECT_EQ(catalog.size(), 4u);  // {a,b,c} | {a,b}, {b,c} | {c}
    EXPECT_EQ(catalog.max_team_size(), 3);
    EXPECT_EQ(tg::largest_minimal_team_size(view), 3);
}

TEST(TeamCatalog, OrdinalsArePerTask) {
    const auto inst = tgtest::webdev_instance(true);
    InstanceView view(inst);
    const auto catalog = tg::enumerate_full_catalog(view);
    for (const auto& col : catalog.columns()) {
        if (col.task_id == "t2") {
            EXPECT_LE(col.ordinal, 1);
        } else {
            EXPECT_EQ(col.ordinal, 0);
        }
        EXPECT_EQ(col.profit, view.task(col.task).profit);
    }
}

TEST(Neighbors, WebdevChainCatalog) {
    const auto inst = tgtest::webdev_instance(true);
    InstanceView view(inst);
    const auto catalog = tg::enumerate_full_catalog(view);
    int c_col = -1;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (catalog.columns()[i].task_id == "t3") {
            c_col = static_cast<int>(i);
        }
    }
    ASSERT_GE(c_col, 0);
    std::vector<std::string> neighbor_labels;
    for (int j : catalog.neighbors(c_col)) {
        const auto& col = catalog.columns()[j];
        neighbor_labels.push_back(col.task_id + ":" +
                                  std::to_string(col.team.members.size()));
    }
    std::sort(neighbor_labels.begin(), neighbor_labels.end());
    // {c} meets {a,b,c} on t1 and {b,c} on t2, never {a,b} and never itself
    EXPECT_EQ(neighbor_labels, (std::vector<std::string>{"t1:3", "t2:2"}));
}

TEST(Neighbors, DisjointSingletonsHaveNone) {
    tg::Instance inst;
    inst.skills = {"x", "y"};
    inst.individuals = {{"u1", {"x"}, 1}, {"u2", {"y"}, 1}};
    inst.tasks = {{"tx", {"x"}, tg::Rational(1), std::nullopt},
                  {"ty", {"y"}, tg::Rational(1), std::nullopt}};
    inst.compatibility = {CompatibilityMode::None, 1};
    InstanceView view(inst);
    const auto catalog = tg::enumerate_full_catalog(view);
    ASSERT_EQ(catalog.size(), 2u);
    EXPECT_TRUE(catalog.neighbors(0).empty());
    EXPECT_TRUE(catalog.neighbors(1).empty());
}

TEST(Neighbors, SymmetricAndIrreflexive) {
    std::mt19937_64 rng(414);
    tgtest::GenParams params;
    params.max_individuals = 6;
    for (int i = 0; i < 30; ++i) {
        const tg::Instance inst = tgtest::random_instance(rng, i, params);
        InstanceView view(inst);
        const auto catalog = tg::enumerate_full_catalog(view);
        for (std::size_t a = 0; a < catalog.size(); ++a) {
            const auto na = catalog.neighbors(static_cast<int>(a));
            ASSERT_EQ(std::count(na.begin(), na.end(), static_cast<int>(a)), 0);
            for (int b : na) {
                const auto nb = catalog.neighbors(b);
                ASSERT_NE(std::find(nb.begin(), nb.end(), static_cast<int>(a)), nb.end());
            }
        }
    }
}
