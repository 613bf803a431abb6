#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/extremal.hpp"
#include "rainbowlab/matching.hpp"
#include "rainbowlab/rainbow.hpp"

using namespace rainbowlab;

TEST(Ext, Examples) {
    EXPECT_EQ(ext_exact(make_circulant_regular_bipartite(4, 3), 2).value, 3);
    EXPECT_EQ(ext_exact(make_path(4), 1).value, 0);
    EXPECT_EQ(oracle::ext(make_path(4), 2), 2);
    auto r = ext_exact(make_path(4), 2);
    EXPECT_EQ(r.value, 2);
    EXPECT_EQ(r.method, ExtMethod::cover_based);
    EXPECT_EQ(r.witness_edges.size(), 2U);
    EXPECT_THROW(ext_exact(make_path(4), 0), PreconditionError);
}

TEST(Ext, NonBipartiteUsesSearch) {
    auto r = ext_exact(make_cycle(5), 2);
    EXPECT_EQ(r.method, ExtMethod::branch_and_bound);
    EXPECT_EQ(r.value, oracle::ext(make_cycle(5), 2));
}

TEST(Ext, AgreesWithBruteForce) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 120; ++i) {
        Graph g = i % 2 ? oracle::random_graph(rng, 6, 10) : oracle::random_bipartite(rng, 3, 4, 0.6);
        for (int m = 1; m <= 3; ++m) {
            auto r = ext_exact(g, m);
            ASSERT_EQ(r.value, oracle::ext(g, m));
            std::vector<Edge> kept;
            for (EdgeId e : r.witness_edges) {
                kept.push_back(g.edge(e));
            }
            ASSERT_LT(oracle::matching_number(Graph(g.vertex_count(), kept)), m);
        }
    }
}

TEST(Ext, ThresholdAboveExtForcesMatching) {
    // Any edge set larger than ext contains an m-matching.
    Graph g = make_circulant_regular_bipartite(3, 2);
    for (int m = 1; m <= 3; ++m) {
        const int e = ext_exact(g, m).value;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edge_count()); ++s) {
            if (std::popcount(s) != e + 1) {
                continue;
            }
            std::vector<Edge> kept;
            for (int i = 0; i < g.edge_count(); ++i) {
                if ((s >> i) & 1U) {
                    kept.push_back(g.edges()[static_cast<std::size_t>(i)]);
                }
            }
            ASSERT_GE(oracle::matching_number(Graph(g.vertex_count(), kept)), m);
        }
    }
}

TEST(Ext, NonBipartiteBudget) {
    std::vector<Edge> edges;
    for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) {
            edges.push_back({a, b});
        }
    }
    EXPECT_THROW(ext_exact(Graph(7, edges), 3), BudgetExceeded);
}

TEST(ExtFormula, Examples) {
    EXPECT_EQ(ext_formula_regular(5, 3, 3), 6);
    EXPECT_EQ(ext_formula_regular(4, 4, 2), 4);
    EXPECT_EQ(ext_formula_regular(3, 1, 2), 1);
    EXPECT_THROW(ext_formula_regular(3, 4, 2), PreconditionError);
    EXPECT_THROW(ext_formula_regular(3, 2, 4), PreconditionError);
}

TEST(Rb, Examples) {
    EXPECT_EQ(rb_exact(make_path(4), 2).rb_value, 2);
    EXPECT_EQ(rb_exact(make_path(3), 2).rb_value, 3);
    EXPECT_EQ(rb_exact(make_complete_bipartite(3), 3).rb_value, 5);
    auto c4 = rb_exact(make_cycle(4), 2);
    EXPECT_EQ(c4.rb_value, 3);
    EXPECT_EQ(c4.f_value, 2);
    ASSERT_TRUE(c4.extremal_coloring.has_value());
    EXPECT_EQ(*c4.extremal_coloring, Coloring({1, 2, 1, 2}));
}

TEST(Rb, CycleFourByBruteForce) {
    EXPECT_EQ(oracle::anti_ramsey(make_cycle(4), 2), 2);
    EXPECT_EQ(oracle::anti_ramsey(make_path(4), 2), 1);
}

TEST(Rb, SingleEdgeMatching) {
    auto r = rb_exact(make_cycle(5), 1);
    EXPECT_EQ(r.rb_value, 1);
    EXPECT_EQ(r.f_value, 0);
    EXPECT_FALSE(r.extremal_coloring.has_value());
}

TEST(Rb, Preconditions) {
    EXPECT_THROW(rb_exact(make_path(4), 3), PreconditionError);
    EXPECT_THROW(rb_exact(make_path(4), 0), PreconditionError);
    EXPECT_THROW(rb_exact(make_circulant_regular_bipartite(5, 4), 2), BudgetExceeded);
    SearchLimits wide;
    wide.max_edges = 100;
    std::vector<Edge> edges;
    for (int a = 0; a < 13; ++a) {
        for (int b = a + 1; b < 13; ++b) {
            edges.push_back({a, b});
        }
    }
    EXPECT_THROW(rb_exact(Graph(13, edges), 2, wide), BudgetExceeded);
}

TEST(Rb, Timeout) {
    SearchLimits limits;
    limits.max_edges = 64;
    limits.timeout = std::chrono::milliseconds(1);
    EXPECT_THROW(rb_exact(make_circulant_regular_bipartite(8, 3), 4, limits), BudgetExceeded);
}

TEST(Rb, AgreesWithBruteForce) {
    std::mt19937_64 rng(8);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        Graph g = i % 2 ? oracle::random_graph(rng, 6, 8) : oracle::random_bipartite(rng, 3, 4, 0.55);
        if (g.edge_count() == 0) {
            continue;
        }
        const int nu = oracle::matching_number(g);
        for (int m = 2; m <= nu; ++m) {
            auto r = rb_exact(g, m);
            ASSERT_EQ(r.f_value, oracle::anti_ramsey(g, m));
            ASSERT_EQ(r.rb_value, r.f_value + 1);
            ASSERT_TRUE(r.extremal_coloring.has_value());
            ASSERT_EQ(r.extremal_coloring->color_count(), r.f_value);
            ASSERT_EQ(*r.extremal_coloring, r.extremal_coloring->canonical());
            ASSERT_FALSE(find_rainbow_matching(g, *r.extremal_coloring, m).has_value());
            ++compared;
        }
    }
    EXPECT_GT(compared, 40);
}

TEST(Rb, CyclesAndPathsByBruteForce) {
    // Frozen from the brute-force oracle: only (4, 2) departs from the cycle
    // formula.
    for (int n = 3; n <= 9; ++n) {
        for (int m = 2; m <= n / 2; ++m) {
            const int oracle_rb = oracle::anti_ramsey(make_cycle(n), m) + 1;
            ASSERT_EQ(rb_exact(make_cycle(n), m).rb_value, oracle_rb);
            const auto formula = rb_formula_cycle(n, m);
            EXPECT_EQ(formula.disputed, oracle_rb != formula.value) << n << ' ' << m;
        }
        for (int m = 2; m <= (n + 1) / 2; ++m) {
            ASSERT_EQ(rb_exact(make_path(n), m).rb_value, oracle::anti_ramsey(make_path(n), m) + 1);
        }
    }
}

TEST(Rb, ParallelMatchesSerial) {
    std::vector<Graph> graphs{make_circulant_regular_bipartite(4, 3), make_complete_bipartite(3), make_cycle(9),
                              make_path(9), make_circulant_regular_bipartite(5, 3)};
    for (const Graph& g : graphs) {
        for (int m = 2; m <= 3; ++m) {
            SearchLimits one;
            SearchLimits many;
            many.workers = 4;
            auto a = rb_exact(g, m, one);
            auto b = rb_exact(g, m, many);
            EXPECT_EQ(a.f_value, b.f_value);
            EXPECT_EQ(a.extremal_coloring, b.extremal_coloring);
        }
    }
}

TEST(Formulas, Regular) {
    EXPECT_EQ(rb_bounds_regular(4, 3, 2), (Bounds{2, 4}));
    EXPECT_EQ(rb_bounds_regular(5, 3, 3), (Bounds{5, 7}));
    EXPECT_EQ(rb_bounds_regular(6, 2, 2), (Bounds{2, 3}));
    EXPECT_THROW(rb_bounds_regular(4, 3, 1), PreconditionError);
    EXPECT_EQ(rb_formula_regular(4, 3, 2), 2);
    EXPECT_EQ(rb_formula_regular(7, 3, 3), 5);
    EXPECT_EQ(rb_formula_regular(6, 3, 3), std::nullopt);
    EXPECT_EQ(rb_formula_regular(7, 2, 3), std::nullopt);
}

TEST(Formulas, PathCycleComplete) {
    EXPECT_EQ(rb_formula_path(6, 3), 5);
    EXPECT_EQ(rb_formula_path(7, 3), 4);
    EXPECT_EQ(rb_formula_path(4, 2), 2);
    EXPECT_THROW(rb_formula_path(4, 3), PreconditionError);
    EXPECT_EQ(rb_formula_cycle(6, 3).value, 5);
    EXPECT_EQ(rb_formula_cycle(8, 3).value, 4);
    auto c4 = rb_formula_cycle(4, 2);
    EXPECT_EQ(c4.value, 2);
    EXPECT_TRUE(c4.disputed);
    EXPECT_FALSE(c4.note.empty());
    EXPECT_EQ(rb_formula_complete_bipartite(3, 2), 2);
    EXPECT_EQ(rb_formula_complete_bipartite(3, 3), 5);
    EXPECT_EQ(rb_formula_complete_bipartite(4, 4), 10);
}
