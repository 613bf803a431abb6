#include "rainbowlab/constructions.hpp"

#include <string>
#include <vector>

#include "rainbowlab/errors.hpp"
#include "rainbowlab/rainbow.hpp"

namespace rainbowlab {

namespace {

ConstructionReport certify(Graph g, int m, std::vector<Color> colors, std::string provenance) {
    ConstructionReport r;
    r.coloring = Coloring(std::move(colors));
    r.graph = std::move(g);
    r.m = m;
    r.colors_used = r.coloring.color_count();
    r.claimed_f_lower_bound = r.colors_used;
    r.rainbow_free_certified = !find_rainbow_matching(r.graph, r.coloring, m).has_value();
    r.provenance = std::move(provenance);
    return r;
}

std::vector<Color> tight_pattern(int n, int m) {
    const int p = n - (2 * m - 2);
    std::vector<Color> colors(static_cast<std::size_t>(n), 0);
    auto set = [&](int edge, Color c) { colors[static_cast<std::size_t>(edge - 1)] = c; };
    for (int i = 1; i <= p; ++i) {
        set(3 * i - 2, 2 * i);
        set(3 * i - 1, 2 * i - 1);
        set(3 * i, 2 * i);
    }
    for (int j = 1; j <= n - 3 * p; ++j) {
        set(3 * p + j, 2 * p + j);
    }
    return colors;
}

void require_tight_range(int n, int m, const char* op) {
    if (m < 2 || m > (n + 1) / 2) {
        throw PreconditionError(std::string(op) + ": requires 2 <= m <= ceil(n/2)");
    }
    if (n > 3 * m - 3) {
        throw PreconditionError(std::string(op) +
                                ": requires n <= 3m-3; for longer paths use path_simple (2m-3 colors)");
    }
}

}  // namespace

ConstructionReport extremal_coloring_regular(const Graph& g, int m) {
    if (!g.is_bipartite()) {
        throw PreconditionError("extremal_coloring_regular: graph must be bipartite");
    }
    const auto xs = g.part(Side::X);
    const auto ys = g.part(Side::Y);
    if (xs.size() != ys.size() || xs.empty()) {
        throw PreconditionError("extremal_coloring_regular: sides must have equal positive size");
    }
    const int k = g.degree(xs.front());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != k) {
            throw PreconditionError("extremal_coloring_regular: graph is not regular");
        }
    }
    const int n = static_cast<int>(xs.size());
    if (m < 2 || m > n) {
        throw PreconditionError("extremal_coloring_regular: requires 2 <= m <= n");
    }

    std::vector<char> in_y1(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 0; i < m - 2; ++i) {
        in_y1[static_cast<std::size_t>(ys[static_cast<std::size_t>(i)])] = 1;
    }
    const Color shared = k * (m - 2) + 1;
    std::vector<Color> colors;
    Color next = 1;
    for (const Edge& e : g.edges()) {
        const bool at_y1 = in_y1[static_cast<std::size_t>(e.u)] || in_y1[static_cast<std::size_t>(e.v)];
        colors.push_back(at_y1 ? next++ : shared);
    }
    return certify(g, m, std::move(colors), "regular: distinct colors on the edges at m-2 vertices of Y");
}

ConstructionReport extremal_coloring_path_simple(int n, int m) {
    if (m < 2 || m > (n + 1) / 2) {
        throw PreconditionError("extremal_coloring_path_simple: requires 2 <= m <= ceil(n/2)");
    }
    if (n < 2 * m - 3) {
        throw PreconditionError("extremal_coloring_path_simple: requires n >= 2m-3");
    }
    std::vector<Color> colors;
    for (int i = 1; i <= n; ++i) {
        colors.push_back(i <= 2 * m - 4 ? i : 2 * m - 3);
    }
    return certify(make_path(n), m, std::move(colors), "path_simple: e_i -> i for i <= 2m-4, rest share 2m-3");
}

ConstructionReport extremal_coloring_path_tight(int n, int m) {
    require_tight_range(n, m, "extremal_coloring_path_tight");
    return certify(make_path(n), m, tight_pattern(n, m), "path_tight: triples (2i, 2i-1, 2i) then distinct colors");
}

ConstructionReport extremal_coloring_cycle_tight(int n, int m) {
    if (n < 3) {
        throw PreconditionError("extremal_coloring_cycle_tight: requires n >= 3");
    }
    require_tight_range(n, m, "extremal_coloring_cycle_tight");
    return certify(make_cycle(n), m, tight_pattern(n, m),
                   "cycle_tight: path_tight pattern wrapped around the cycle (candidate, certified at run time)");
}

}  // namespace rainbowlab
