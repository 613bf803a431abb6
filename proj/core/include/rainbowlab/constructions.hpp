#pragma once

#include <string>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// An explicit coloring meant to have no rainbow mK2, together with the result
// of actually checking that.
struct ConstructionReport {
    Graph graph;
    int m = 0;
    Coloring coloring;
    int colors_used = 0;
    int claimed_f_lower_bound = 0;
    bool rainbow_free_certified = false;  // set only by a rainbow search
    std::string provenance;
};

// Y1 = the first m-2 vertices of Y. Edges at Y1 get distinct colors (in edge
// order) and all other edges share one last color: k(m-2)+1 colors.
// Requires a k-regular bipartite graph and 2 <= m <= |X|.
ConstructionReport extremal_coloring_regular(const Graph& g, int m);

// On P_n: c(e_i) = i for i <= 2m-4, every later edge gets 2m-3.
// Requires 2 <= m <= ceil(n/2) and n >= 2m-3.
ConstructionReport extremal_coloring_path_simple(int n, int m);

// On P_n with p = n-(2m-2): e_{3i-2}, e_{3i} get 2i and e_{3i-1} gets 2i-1
// for i <= p, then e_{3p+j} gets 2p+j. 2m-2 colors. Requires n <= 3m-3 and
// 2 <= m <= ceil(n/2).
ConstructionReport extremal_coloring_path_tight(int n, int m);

// The path_tight pattern laid on e_1..e_n of C_n. Whether it is rainbow-free
// is decided by the certification, not assumed. Requires n <= 3m-3 and
// 2 <= m <= ceil(n/2).
ConstructionReport extremal_coloring_cycle_tight(int n, int m);

}  // namespace rainbowlab
