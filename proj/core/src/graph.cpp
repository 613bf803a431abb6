#include "rainbowlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<std::vector<Side>> sides)
    : vertex_count_(vertex_count), edges_(std::move(edges)), sides_(std::move(sides)) {
    if (vertex_count_ < 0) {
        throw PreconditionError("vertex count must be non-negative");
    }
    if (sides_ && static_cast<int>(sides_->size()) != vertex_count_) {
        throw PreconditionError("bipartition must assign a side to every vertex");
    }
    incidence_.resize(static_cast<std::size_t>(vertex_count_));
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
            throw PreconditionError("edge " + std::to_string(i + 1) + " has an endpoint out of range");
        }
        if (e.u == e.v) {
            throw PreconditionError("edge " + std::to_string(i + 1) + " is a loop");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (!seen.insert(e).second) {
            throw PreconditionError("edge " + std::to_string(i + 1) + " duplicates an earlier edge");
        }
        if (sides_ && side(e.u) == side(e.v)) {
            throw PreconditionError("edge " + std::to_string(i + 1) + " lies inside one side of the bipartition");
        }
        const auto id = static_cast<EdgeId>(i + 1);
        incidence_[static_cast<std::size_t>(e.u)].push_back(id);
        incidence_[static_cast<std::size_t>(e.v)].push_back(id);
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < vertex_count_; ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (EdgeId e : incident(v)) {
        out.push_back(edge(e).other(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::any_of(incident(u).begin(), incident(u).end(), [&](EdgeId e) { return edge(e).touches(v); });
}

std::vector<Vertex> Graph::part(Side s) const {
    std::vector<Vertex> out;
    if (!sides_) {
        return out;
    }
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (side(v) == s) {
            out.push_back(v);
        }
    }
    return out;
}

bool Graph::has_contiguous_bipartition() const {
    if (!sides_) {
        return false;
    }
    return std::is_sorted(sides_->begin(), sides_->end());
}

std::optional<std::vector<Side>> infer_bipartition(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) {
        return std::nullopt;
    }
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count));
    for (const Edge& e : edges) {
        // Malformed edges are left for the Graph constructor to report.
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
            return std::nullopt;
        }
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> color(static_cast<std::size_t>(vertex_count), -1);
    for (Vertex root = 0; root < vertex_count; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) {
            continue;
        }
        color[static_cast<std::size_t>(root)] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            for (Vertex w : adj[static_cast<std::size_t>(v)]) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> sides(static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < sides.size(); ++i) {
        sides[i] = color[i] == 0 ? Side::X : Side::Y;
    }
    return sides;
}

Graph make_path(int n) {
    if (n < 1) {
        throw PreconditionError("path needs at least one edge (n >= 1)");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({i - 1, i});
    }
    std::vector<Side> sides;
    for (int v = 0; v <= n; ++v) {
        sides.push_back(v % 2 == 0 ? Side::X : Side::Y);
    }
    return Graph(n + 1, std::move(edges), std::move(sides));
}

Graph make_cycle(int n) {
    if (n < 3) {
        throw PreconditionError("cycle needs n >= 3");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({i - 1, i % n});
    }
    std::optional<std::vector<Side>> sides;
    if (n % 2 == 0) {
        sides.emplace();
        for (int v = 0; v < n; ++v) {
            sides->push_back(v % 2 == 0 ? Side::X : Side::Y);
        }
    }
    return Graph(n, std::move(edges), std::move(sides));
}

namespace {

std::vector<Side> balanced_sides(int n) {
    std::vector<Side> sides(static_cast<std::size_t>(2 * n), Side::Y);
    std::fill_n(sides.begin(), n, Side::X);
    return sides;
}

}  // namespace

Graph make_complete_bipartite(int n) {
    if (n < 1) {
        throw PreconditionError("complete bipartite graph needs n >= 1");
    }
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            edges.push_back({x, n + y});
        }
    }
    return Graph(2 * n, std::move(edges), balanced_sides(n));
}

Graph make_circulant_regular_bipartite(int n, int k) {
    if (n < 1 || k < 1) {
        throw PreconditionError("circulant graph needs n >= 1 and k >= 1");
    }
    if (k > n) {
        throw PreconditionError("circulant graph needs k <= n");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) {
            edges.push_back({i, n + (i + j) % n});
        }
    }
    return Graph(2 * n, std::move(edges), balanced_sides(n));
}

RandomRegularResult make_random_regular_bipartite(int n, int k, std::uint64_t seed, int max_attempts) {
    if (n < 1 || k < 1) {
        throw PreconditionError("random regular graph needs n >= 1 and k >= 1");
    }
    if (k > n) {
        throw PreconditionError("random regular graph needs k <= n");
    }
    constexpr int kLayerRedraws = 64;
    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        bool ok = true;
        for (int layer = 0; layer < k && ok; ++layer) {
            bool placed = false;
            for (int redraw = 0; redraw < kLayerRedraws && !placed; ++redraw) {
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                placed = true;
                for (int x = 0; x < n; ++x) {
                    if (used[static_cast<std::size_t>(x)][static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])]) {
                        placed = false;
                        break;
                    }
                }
            }
            if (!placed) {
                ok = false;
                break;
            }
            for (int x = 0; x < n; ++x) {
                used[static_cast<std::size_t>(x)][static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = 1;
            }
        }
        if (!ok) {
            continue;
        }
        std::vector<Edge> edges;
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (used[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
                    edges.push_back({x, n + y});
                }
            }
        }
        return {Graph(2 * n, std::move(edges), balanced_sides(n)), false, attempt};
    }
    return {make_circulant_regular_bipartite(n, k), true, max_attempts};
}

IdentifyResult identify_vertices(const Graph& g, Vertex u, Vertex v) {
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw PreconditionError("identify_vertices: vertex out of range");
    }
    if (u == v) {
        throw PreconditionError("identify_vertices: the two vertices must differ");
    }
    if (g.adjacent(u, v)) {
        throw PreconditionError("identify_vertices: vertices are adjacent (identification would create a loop)");
    }
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    std::vector<Vertex> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty()) {
        throw PreconditionError("identify_vertices: vertices share neighbor " + std::to_string(common.front()) +
                                " (identification would create a multi-edge)");
    }

    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    auto relabel = [&](Vertex w) {
        if (w == drop) {
            return keep;
        }
        return w > drop ? w - 1 : w;
    };

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        edges.push_back({relabel(e.u), relabel(e.v)});
    }
    auto sides = infer_bipartition(n - 1, edges);
    IdentifyResult out{Graph(n - 1, std::move(edges), std::move(sides)), keep, {}};
    out.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(out.edge_map.begin(), out.edge_map.end(), 1);
    return out;
}

}  // namespace rainbowlab
