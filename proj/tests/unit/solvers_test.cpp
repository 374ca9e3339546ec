#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "urm/generators.hpp"
#include "urm/graph_io.hpp"
#include "urm/solvers.hpp"

namespace urm {
namespace {

struct Reference {
    const char* name;
    Graph g;
    int nu, nu_ur, nu_ac;
};

// Values frozen from tests/oracles/brute_force.py (exhaustive, networkx).
std::vector<Reference> references() {
    return {
        {"K22", complete_bipartite(2, 2), 2, 1, 1},
        {"K33", complete_bipartite(3, 3), 3, 1, 1},
        {"K23", complete_bipartite(2, 3), 2, 1, 1},
        {"K44", complete_bipartite(4, 4), 4, 1, 1},
        {"C5", cycle_graph(5), 2, 2, 2},
        {"C6", cycle_graph(6), 3, 2, 2},
        {"P4", path_graph(4), 2, 2, 2},
        {"K4", complete_graph(4), 2, 1, 1},
        {"2C4", disjoint_union(cycle_graph(4), cycle_graph(4)), 4, 2, 2},
        {"Petersen", petersen_graph(), 5, 3, 3},
        {"G1", gk_gadget(1), 7, 4, 4},
    };
}

TEST(Solvers, FrozenReferenceValues) {
    for (const auto& r : references()) {
        SCOPED_TRACE(r.name);
        SolveResult nu = max_matching(r.g);
        SolveResult ur = nu_ur_exact(r.g);
        SolveResult ac = nu_ac_exact(r.g);
        EXPECT_EQ(nu.value, r.nu);
        EXPECT_EQ(ur.value, r.nu_ur);
        EXPECT_EQ(ac.value, r.nu_ac);
        EXPECT_TRUE(ur.optimal);
        EXPECT_TRUE(ac.optimal);
        EXPECT_EQ(nu.witness.size(), r.nu);
        EXPECT_TRUE(is_matching(r.g, nu.witness));
        EXPECT_TRUE(is_uniquely_restricted_oracle(r.g, ur.witness));
        EXPECT_TRUE(is_acyclic_matching(r.g, ac.witness));
    }
}

TEST(Solvers, TreesHaveAllThreeEqual) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph t = testing::random_tree(3 + static_cast<int>(seed % 12), seed);
        int nu = max_matching(t).value;
        EXPECT_EQ(nu_ur_exact(t).value, nu);
        EXPECT_EQ(nu_ac_exact(t).value, nu);
    }
}

// Exhaustive maximum over all matchings, using the definition-level check.
int brute_nu_ur(const Graph& g) {
    int best = 0;
    for_each_matching(g, [&](const Matching& m) {
        if (m.size() > best && is_uniquely_restricted_oracle(g, m)) best = m.size();
    });
    return best;
}

TEST(Solvers, MatchesBruteForceOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 7), 2 + static_cast<int>(seed % 4), std::nullopt, seed);
        int brute_nu = 0, brute_ac = 0;
        for_each_matching(g, [&](const Matching& m) {
            brute_nu = std::max(brute_nu, m.size());
            if (is_acyclic_matching(g, m)) brute_ac = std::max(brute_ac, m.size());
        });
        ASSERT_EQ(max_matching(g).value, brute_nu) << write_graph6(g);
        ASSERT_EQ(nu_ur_exact(g).value, brute_nu_ur(g)) << write_graph6(g);
        ASSERT_EQ(nu_ac_exact(g).value, brute_ac) << write_graph6(g);
    }
}

TEST(Solvers, BlossomOnLargerGraphs) {
    EXPECT_EQ(max_matching(cycle_graph(101)).value, 50);
    EXPECT_EQ(max_matching(petersen_graph()).value, 5);
    EXPECT_EQ(max_matching(complete_graph(9)).value, 4);
    EXPECT_EQ(max_matching(Graph(4)).value, 0);
}

TEST(Solvers, BudgetExhaustionIsFlagged) {
    SolveOptions opt;
    opt.budget = 5;
    SolveResult r = nu_ur_exact(gk_gadget(2), opt);
    EXPECT_FALSE(r.optimal);
    EXPECT_LE(r.value, 7);
    EXPECT_TRUE(is_uniquely_restricted_fast(gk_gadget(2), r.witness).uniquely_restricted);
}

TEST(Solvers, TargetStopsEarly) {
    SolveOptions opt;
    opt.target = 2;
    SolveResult r = nu_ur_exact(petersen_graph(), opt);
    EXPECT_GE(r.value, 2);
    EXPECT_FALSE(r.optimal);
}

TEST(Solvers, GreedyIsMaximalAndUniquelyRestricted) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_graph(14, 3, std::nullopt, seed);
        Matching m = greedy_uniquely_restricted(g);
        ASSERT_TRUE(is_uniquely_restricted_fast(g, m).uniquely_restricted);
        auto mate = m.mates(g.order());
        for (const Edge& e : g.edges())
            if (mate[e.u] == kNoVertex && mate[e.v] == kNoVertex)
                ASSERT_FALSE(extends_uniquely_restricted(g, mate, e));
    }
}

// Every subset of a UR (acyclic) matching is UR (acyclic); the search relies
// on this to prune.
TEST(Solvers, PropertiesAreHereditary) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(8, 3, std::nullopt, seed);
        for_each_matching(g, [&](const Matching& m) {
            bool ur = is_uniquely_restricted_fast(g, m).uniquely_restricted;
            bool ac = is_acyclic_matching(g, m);
            for (const Edge& e : m.edges()) {
                Matching sub = m.without(e);
                if (ur) ASSERT_TRUE(is_uniquely_restricted_fast(g, sub).uniquely_restricted);
                if (ac) ASSERT_TRUE(is_acyclic_matching(g, sub));
            }
        });
    }
}

}  // namespace
}  // namespace urm
