#include "edge_masks.hpp"

#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab::detail {

ConflictTable::ConflictTable(const Graph& g) : edge_count(g.edge_count()) {
    if (edge_count > kMaxMaskEdges) {
        throw PreconditionError("bitmask kernels support at most 64 edges, graph has " + std::to_string(edge_count));
    }
    conflict.assign(static_cast<std::size_t>(edge_count), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Mask at_v = 0;
        for (EdgeId e : g.incident(v)) {
            at_v |= bit(e - 1);
        }
        for (EdgeId e : g.incident(v)) {
            conflict[static_cast<std::size_t>(e - 1)] |= at_v;
        }
    }
}

bool has_matching(const ConflictTable& t, Mask candidates, int need) {
    if (need <= 0) {
        return true;
    }
    if (popcount(candidates) < need) {
        return false;
    }
    // Either the lowest candidate edge is used, or it is not.
    const int e = lowest(candidates);
    if (has_matching(t, candidates & ~t.conflict[static_cast<std::size_t>(e)], need - 1)) {
        return true;
    }
    return has_matching(t, candidates & ~bit(e), need);
}

int matching_number(const ConflictTable& t, Mask candidates) {
    int size = 0;
    while (has_matching(t, candidates, size + 1)) {
        ++size;
    }
    return size;
}

bool has_rainbow_matching(const ConflictTable& t, std::span<const int> color_of, std::span<const Mask> class_of,
                          Mask candidates, int need) {
    if (need <= 0) {
        return true;
    }
    if (popcount(candidates) < need) {
        return false;
    }
    int live_colors = 0;
    for (Mask cls : class_of) {
        if (cls & candidates) {
            if (++live_colors >= need) {
                break;
            }
        }
    }
    if (live_colors < need) {
        return false;
    }
    const int e = lowest(candidates);
    const Mask without_e = candidates & ~t.conflict[static_cast<std::size_t>(e)] &
                           ~class_of[static_cast<std::size_t>(color_of[static_cast<std::size_t>(e)])];
    if (has_rainbow_matching(t, color_of, class_of, without_e, need - 1)) {
        return true;
    }
    return has_rainbow_matching(t, color_of, class_of, candidates & ~bit(e), need);
}

}  // namespace rainbowlab::detail
