#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

enum class ExtMethod { cover_based, branch_and_bound };

const char* to_string(ExtMethod method);

// Largest edge set of G containing no matching of size m.
struct ExtResult {
    int value = 0;
    std::vector<EdgeId> witness_edges;  // ascending, |witness_edges| == value
    ExtMethod method = ExtMethod::cover_based;
};

// Bipartite G: a subgraph avoids an m-matching iff some m-1 vertices cover
// it, so the answer is the best edge count incident to m-1 vertices.
// Otherwise branch-and-bound over edge subsets (at most 18 edges).
ExtResult ext_exact(const Graph& g, int m);

// k(m-1). Requires 2 <= m <= n and 1 <= k <= n.
int ext_formula_regular(int n, int k, int m);

struct SearchLimits {
    int max_edges = 16;
    std::optional<std::chrono::milliseconds> timeout;
    int workers = 1;
};

struct RbResult {
    int f_value = 0;   // most colors with no rainbow mK2
    int rb_value = 1;  // f_value + 1
    // Lexicographically smallest restricted-growth coloring attaining
    // f_value; absent when m == 1 (every coloring has a rainbow edge).
    std::optional<Coloring> extremal_coloring;
    std::uint64_t colorings_examined = 0;
    std::chrono::milliseconds elapsed{0};
};

// Exhaustive search over canonical (restricted-growth) colorings of G's edges
// in index order. A partial coloring is abandoned as soon as its colored edges
// contain a rainbow mK2, or when its color count plus the uncolored edges
// cannot beat the best coloring found so far.
//
// Throws BudgetExceeded above limits.max_edges (or 64) edges or past the
// timeout, PreconditionError when m < 1 or m exceeds the matching number.
// The result apart from colorings_examined and elapsed does not depend on
// limits.workers.
RbResult rb_exact(const Graph& g, int m, const SearchLimits& limits = {});

struct Bounds {
    int lower = 0;
    int upper = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

// (k(m-2)+2, k(m-1)+1) for k-regular bipartite graphs with parts of size n.
// m == 1 is rejected: there the rainbow number is 1 for every graph.
Bounds rb_bounds_regular(int n, int k, int m);

// k(m-2)+2 when k >= 3 and n > 3(m-1); nullopt where the closed form is not
// claimed.
std::optional<int> rb_formula_regular(int n, int k, int m);

// 2m-1 if n <= 3m-3, else 2m-2. Requires 2 <= m <= ceil(n/2).
int rb_formula_path(int n, int m);

struct CycleFormula {
    int value = 0;
    // Set where exhaustive search contradicts the closed form.
    bool disputed = false;
    std::string note;
};

// Same two branches as the path formula. Requires n >= 3 and
// 2 <= m <= floor(n/2).
CycleFormula rb_formula_cycle(int n, int m);

// n(m-2)+2 for K_{n,n}. Requires n >= 3 and 2 <= m <= n.
int rb_formula_complete_bipartite(int n, int m);

}  // namespace rainbowlab
