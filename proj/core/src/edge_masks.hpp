#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbowlab/graph.hpp"

// Bitmask kernels over the edge set of graphs with at most 64 edges. Bit i
// stands for edge i+1.
namespace rainbowlab::detail {

using Mask = std::uint64_t;
inline constexpr int kMaxMaskEdges = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

inline Mask prefix_mask(int count) { return count >= 64 ? ~Mask{0} : bit(count) - 1; }

struct ConflictTable {
    // Throws PreconditionError above kMaxMaskEdges edges.
    explicit ConflictTable(const Graph& g);

    int edge_count = 0;
    // conflict[i]: edges sharing an endpoint with edge i, including i itself.
    std::vector<Mask> conflict;
};

// Is there a matching of `need` edges inside `candidates`?
bool has_matching(const ConflictTable& t, Mask candidates, int need);

int matching_number(const ConflictTable& t, Mask candidates);

// Is there a matching of `need` edges inside `candidates` whose colors are
// pairwise distinct? `color_of[i]` is the (0-based) color of edge i and
// `class_of[c]` the mask of edges colored c.
bool has_rainbow_matching(const ConflictTable& t, std::span<const int> color_of, std::span<const Mask> class_of,
                          Mask candidates, int need);

}  // namespace rainbowlab::detail
