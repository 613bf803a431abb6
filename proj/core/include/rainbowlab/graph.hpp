#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rainbowlab {

using Vertex = int;

// Edge indices are 1-based: edge e_i of a graph is `graph.edge(i)`.
using EdgeId = int;

struct Edge {
    Vertex u;
    Vertex v;

    bool touches(Vertex w) const { return u == w || v == w; }
    bool shares_vertex(const Edge& other) const { return touches(other.u) || touches(other.v); }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side : std::uint8_t { X, Y };

// Simple undirected graph with a stable edge order and an optional bipartition.
//
// Edges are stored normalized (u < v). All values are immutable after
// construction, so a Graph can be shared freely between threads.
class Graph {
public:
    Graph() = default;

    // Throws PreconditionError on loops, duplicate edges, out-of-range
    // endpoints, or an edge inside one side of the bipartition.
    Graph(int vertex_count, std::vector<Edge> edges, std::optional<std::vector<Side>> sides = std::nullopt);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e - 1)]; }
    std::span<const Edge> edges() const { return edges_; }

    // Edge ids incident to v, ascending.
    std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;
    std::vector<Vertex> neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    bool is_bipartite() const { return sides_.has_value(); }
    Side side(Vertex v) const { return (*sides_)[static_cast<std::size_t>(v)]; }
    const std::optional<std::vector<Side>>& sides() const { return sides_; }
    std::vector<Vertex> part(Side s) const;

    // True when X = {0..|X|-1} and Y follows, which is what the bipartite
    // file header can express.
    bool has_contiguous_bipartition() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.sides_ == b.sides_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<Side>> sides_;
    std::vector<std::vector<EdgeId>> incidence_;
};

// Two-colors each component by BFS from its lowest vertex, which lands in X.
// nullopt when the graph has an odd cycle.
std::optional<std::vector<Side>> infer_bipartition(int vertex_count, std::span<const Edge> edges);

// Path x_0 - x_1 - ... - x_n with edge e_i = x_{i-1}x_i; sides by parity.
Graph make_path(int n);

// Cycle on n vertices, e_i = x_{i-1}x_{i mod n}; bipartite iff n is even.
Graph make_cycle(int n);

// K_{n,n} with X = 0..n-1 and Y = n..2n-1, edges in x-major order.
Graph make_complete_bipartite(int n);

// x_i ~ y_{(i+j) mod n} for j = 0..k-1. Deterministic k-regular representative.
Graph make_circulant_regular_bipartite(int n, int k);

struct RandomRegularResult {
    Graph graph;
    bool fell_back = false;  // retry budget exhausted, circulant returned instead
    int attempts = 0;
};

// Superposes k random permutations, rejecting layers that would create a
// multi-edge. Same (n, k, seed) gives the same graph.
RandomRegularResult make_random_regular_bipartite(int n, int k, std::uint64_t seed, int max_attempts = 200);

struct IdentifyResult {
    Graph graph;
    Vertex merged = 0;               // id of the new vertex in the result
    std::vector<EdgeId> edge_map;    // edge_map[e-1] = image of G's edge e in H
};

// Merges u and v into one vertex. The merged vertex takes id min(u, v);
// ids above max(u, v) shift down by one. Rejects adjacent pairs and pairs
// with a common neighbor.
IdentifyResult identify_vertices(const Graph& g, Vertex u, Vertex v);

}  // namespace rainbowlab
