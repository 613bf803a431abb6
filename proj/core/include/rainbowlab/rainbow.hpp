#pragma once

#include <optional>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// m pairwise vertex-disjoint edges with pairwise distinct colors;
// colors[i] is the color of edges[i].
struct RainbowWitness {
    std::vector<EdgeId> edges;
    std::vector<Color> colors;

    friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

bool is_rainbow_matching(const Graph& g, const Coloring& c, const std::vector<EdgeId>& edges);

// Exact decision by backtracking over edges in index order. A branch is cut
// when the edges still available (later index, untouched endpoints, unused
// color) have matching number or distinct-color count below what is missing.
// The returned witness is the lexicographically smallest edge sequence.
std::optional<RainbowWitness> find_rainbow_matching(const Graph& g, const Coloring& c, int m);

// Spanning subgraph keeping the lowest-index edge of every color class, in
// ascending original index.
Graph representative_subgraph(const Graph& g, const Coloring& c);

// The edge ids kept by representative_subgraph, in the same order.
std::vector<EdgeId> representative_edges(const Coloring& c);

// Independent second decision procedure for tests: tries every m-subset of
// colors and asks whether one edge per chosen color can be picked pairwise
// disjoint. Refuses graphs with more than 20 edges.
bool enumerate_representative_choices(const Graph& g, const Coloring& c, int m);

}  // namespace rainbowlab
