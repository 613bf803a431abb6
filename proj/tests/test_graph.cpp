#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/graph.hpp"

using namespace rainbowlab;

namespace {

int degree_sum(const Graph& g) {
    int total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        total += g.degree(v);
    }
    return total;
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph(3, {{1, 1}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 3}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, -1}}), PreconditionError);
    EXPECT_THROW(Graph(-1, {}), PreconditionError);
}

TEST(Graph, RejectsEdgeInsideOneSide) {
    EXPECT_THROW(Graph(3, {{0, 1}}, std::vector<Side>{Side::X, Side::X, Side::Y}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 2}}, std::vector<Side>{Side::X, Side::Y}), PreconditionError);
}

TEST(Graph, NormalizesEndpoints) {
    Graph g(3, {{2, 0}, {1, 2}});
    EXPECT_EQ(g.edge(1), (Edge{0, 2}));
    EXPECT_EQ(g.edge(2), (Edge{1, 2}));
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Path, ThreeEdges) {
    Graph p = make_path(3);
    EXPECT_EQ(p.vertex_count(), 4);
    ASSERT_EQ(p.edge_count(), 3);
    EXPECT_EQ(p.edge(1), (Edge{0, 1}));
    EXPECT_EQ(p.edge(2), (Edge{1, 2}));
    EXPECT_EQ(p.edge(3), (Edge{2, 3}));
}

TEST(Path, SingleEdgeAndParitySides) {
    EXPECT_EQ(make_path(1).edge_count(), 1);
    Graph p6 = make_path(6);
    ASSERT_TRUE(p6.is_bipartite());
    EXPECT_EQ(p6.part(Side::X).size(), 4U);
    EXPECT_EQ(p6.part(Side::Y).size(), 3U);
    EXPECT_THROW(make_path(0), PreconditionError);
}

TEST(Cycle, Parity) {
    EXPECT_TRUE(make_cycle(4).is_bipartite());
    EXPECT_FALSE(make_cycle(5).is_bipartite());
    Graph c3 = make_cycle(3);
    EXPECT_EQ(c3.edge_count(), 3);
    EXPECT_EQ(c3.vertex_count(), 3);
    EXPECT_THROW(make_cycle(2), PreconditionError);
}

TEST(CompleteBipartite, Basics) {
    Graph k33 = make_complete_bipartite(3);
    EXPECT_EQ(k33.edge_count(), 9);
    for (Vertex v = 0; v < 6; ++v) {
        EXPECT_EQ(k33.degree(v), 3);
    }
    EXPECT_EQ(make_complete_bipartite(1).edge_count(), 1);
    Graph k22 = make_complete_bipartite(2);
    EXPECT_EQ(k22.edge_count(), 4);
    for (Vertex v = 0; v < 4; ++v) {
        EXPECT_EQ(k22.degree(v), 2);
    }
}

TEST(Circulant, Examples) {
    Graph b43 = make_circulant_regular_bipartite(4, 3);
    EXPECT_EQ(b43.edge_count(), 12);
    Graph b33 = make_circulant_regular_bipartite(3, 3);
    Graph k33 = make_complete_bipartite(3);
    EXPECT_EQ(std::set<Edge>(b33.edges().begin(), b33.edges().end()),
              std::set<Edge>(k33.edges().begin(), k33.edges().end()));
    Graph b51 = make_circulant_regular_bipartite(5, 1);
    EXPECT_EQ(b51.edge_count(), 5);
    EXPECT_EQ(b51.max_degree(), 1);
    EXPECT_THROW(make_circulant_regular_bipartite(3, 4), PreconditionError);
    EXPECT_THROW(make_circulant_regular_bipartite(3, 0), PreconditionError);
}

TEST(Circulant, RegularForAllSmallParameters) {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            Graph g = make_circulant_regular_bipartite(n, k);
            ASSERT_EQ(g.edge_count(), n * k);
            for (Vertex v = 0; v < 2 * n; ++v) {
                ASSERT_EQ(g.degree(v), k) << n << ' ' << k;
            }
            EXPECT_EQ(degree_sum(g), 2 * g.edge_count());
        }
    }
}

TEST(RandomRegular, RegularAndSeeded) {
    auto r = make_random_regular_bipartite(5, 2, 7);
    for (Vertex v = 0; v < 10; ++v) {
        EXPECT_EQ(r.graph.degree(v), 2);
    }
    EXPECT_EQ(make_random_regular_bipartite(3, 3, 42).graph, make_complete_bipartite(3));
    EXPECT_EQ(make_random_regular_bipartite(6, 3, 1).graph, make_random_regular_bipartite(6, 3, 1).graph);
}

TEST(RandomRegular, ManySeeds) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (int n = 2; n <= 7; ++n) {
            for (int k = 1; k <= n; ++k) {
                auto r = make_random_regular_bipartite(n, k, seed);
                ASSERT_TRUE(r.graph.is_bipartite());
                for (Vertex v = 0; v < 2 * n; ++v) {
                    ASSERT_EQ(r.graph.degree(v), k);
                }
            }
        }
    }
}

TEST(Identify, PathEndsGiveCycle) {
    for (int n = 3; n <= 10; ++n) {
        auto r = identify_vertices(make_path(n), 0, n);
        EXPECT_EQ(r.graph.edge_count(), n);
        EXPECT_EQ(r.graph, make_cycle(n)) << n;
    }
    auto c4 = identify_vertices(make_path(4), 0, 4);
    EXPECT_TRUE(c4.graph.is_bipartite());
    EXPECT_EQ(c4.graph.vertex_count(), 4);
}

TEST(Identify, IsolatedVerticesKeepEdges) {
    Graph g(5, {{0, 1}, {1, 2}});
    auto r = identify_vertices(g, 3, 4);
    EXPECT_EQ(r.graph.vertex_count(), 4);
    EXPECT_EQ(r.graph.edge_count(), 2);
    EXPECT_EQ(r.merged, 3);
    EXPECT_EQ(r.graph.edge(1), g.edge(1));
}

TEST(Identify, RejectsAdjacentOrCommonNeighbor) {
    Graph p = make_path(3);
    EXPECT_THROW(identify_vertices(p, 0, 1), PreconditionError);
    EXPECT_THROW(identify_vertices(p, 0, 2), PreconditionError);
    EXPECT_THROW(identify_vertices(p, 1, 1), PreconditionError);
    EXPECT_NO_THROW(identify_vertices(p, 0, 3));
}

TEST(Identify, RandomPreservesDegrees) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int round = 0; round < 300; ++round) {
        Graph g = oracle::random_graph(rng, 7, 10);
        for (Vertex u = 0; u < 7; ++u) {
            for (Vertex v = u + 1; v < 7; ++v) {
                bool ok = !g.adjacent(u, v);
                for (Vertex w : g.neighbors(u)) {
                    ok = ok && !g.adjacent(w, v);
                }
                if (!ok) {
                    EXPECT_THROW(identify_vertices(g, u, v), PreconditionError);
                    continue;
                }
                auto r = identify_vertices(g, u, v);
                ++checked;
                ASSERT_EQ(r.graph.edge_count(), g.edge_count());
                ASSERT_EQ(r.graph.vertex_count(), 6);
                EXPECT_EQ(r.graph.degree(r.merged), g.degree(u) + g.degree(v));
                EXPECT_EQ(degree_sum(r.graph), 2 * g.edge_count());
                for (EdgeId e = 1; e <= g.edge_count(); ++e) {
                    const Edge& image = r.graph.edge(r.edge_map[static_cast<std::size_t>(e - 1)]);
                    EXPECT_EQ(g.edge(e).touches(u) || g.edge(e).touches(v), image.touches(r.merged));
                }
            }
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Bipartition, InferenceIgnoresMalformedEdges) {
    std::vector<Edge> bad{{0, 5}};
    EXPECT_FALSE(infer_bipartition(3, bad).has_value());
}

TEST(Bipartition, InferenceOnOddCycleFails) {
    EXPECT_FALSE(infer_bipartition(3, make_cycle(3).edges()).has_value());
    auto sides = infer_bipartition(4, make_cycle(4).edges());
    ASSERT_TRUE(sides.has_value());
    EXPECT_EQ((*sides)[0], Side::X);
    EXPECT_NE((*sides)[0], (*sides)[1]);
}
