#pragma once

#include <optional>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// A set of pairwise vertex-disjoint edges, stored as ascending edge ids.
struct Matching {
    std::vector<EdgeId> edges;

    int size() const { return static_cast<int>(edges.size()); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

struct VertexCoverWitness {
    std::vector<Vertex> vertices;  // ascending
    int certified_size = 0;
};

// A subset S of the larger side with |S| - |N(S)| equal to the number of
// vertices of that side missed by a maximum matching.
struct DeficiencyWitness {
    std::vector<Vertex> subset;        // S
    std::vector<Vertex> neighborhood;  // N(S)
    int deficiency = 0;                // |S| - |N(S)|
    bool swapped_sides = false;        // S taken from Y because |Y| > |X|
};

struct SaturatingMatching {
    Matching matching;
    int max_degree = 0;
    int saturated = 0;   // maximum-degree vertices covered by `matching`
    int exchanges = 0;   // vertex-replacement walks applied
};

bool is_matching(const Graph& g, const std::vector<EdgeId>& edges);
bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& vertices);

// All operations below require a bipartite graph and throw PreconditionError
// otherwise.

// Augmenting-path search; free X vertices scanned in increasing index, each
// vertex's edges in edge order.
Matching maximum_matching(const Graph& g);

// Koenig cover from alternating reachability; the cover property is checked
// before returning.
VertexCoverWitness minimum_vertex_cover(const Graph& g);

DeficiencyWitness deficiency_witness(const Graph& g);

// Among matchings of exactly `target_size` edges, one covering as many
// maximum-degree vertices as possible. nullopt when the matching number is
// smaller than `target_size`.
//
// When target_size equals the matching number the result is obtained by
// repeated vertex replacement: an uncovered maximum-degree vertex v is walked
// along an alternating path v, u1, v1, u2, v2, ... (u_i neighbor of the
// previous v, v_i its partner) until a covered vertex w of lower degree is
// reached, and the path is flipped so that v enters and w leaves. On each
// side, the covered sets of maximum matchings are the bases of a transversal
// matroid, so the walk stops only at an optimum. For smaller targets the
// matching is grown by maximum-gain augmenting paths first, then the same walk
// is applied.
std::optional<SaturatingMatching> saturating_matching(const Graph& g, int target_size);

// Matching number of an arbitrary (possibly non-bipartite) graph by exhaustive
// branching. Intended for the small odd cycles the bipartite routines cannot
// take; refuses graphs with more than 64 edges.
int matching_number_exhaustive(const Graph& g);

// Matching number using the bipartite routine when possible, exhaustive
// branching otherwise.
int matching_number(const Graph& g);

}  // namespace rainbowlab
