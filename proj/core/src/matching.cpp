#include "rainbowlab/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "edge_masks.hpp"
#include "rainbowlab/errors.hpp"

namespace rainbowlab {

namespace {

void require_bipartite(const Graph& g, const char* op) {
    if (!g.is_bipartite()) {
        throw PreconditionError(std::string(op) + " requires a bipartite graph (general matching is not supported)");
    }
}

// mate[v] = id of the matching edge covering v, or 0.
using Mates = std::vector<EdgeId>;

class Kuhn {
public:
    explicit Kuhn(const Graph& g) : g_(g), mate_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    Mates run() {
        for (Vertex x : g_.part(Side::X)) {
            if (mate_[static_cast<std::size_t>(x)] == 0) {
                visited_.assign(static_cast<std::size_t>(g_.vertex_count()), 0);
                augment(x);
            }
        }
        return mate_;
    }

private:
    bool augment(Vertex x) {
        for (EdgeId e : g_.incident(x)) {
            const Vertex y = g_.edge(e).other(x);
            if (visited_[static_cast<std::size_t>(y)]) {
                continue;
            }
            visited_[static_cast<std::size_t>(y)] = 1;
            const EdgeId held = mate_[static_cast<std::size_t>(y)];
            if (held == 0 || augment(g_.edge(held).other(y))) {
                mate_[static_cast<std::size_t>(x)] = e;
                mate_[static_cast<std::size_t>(y)] = e;
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    Mates mate_;
    std::vector<char> visited_;
};

Matching to_matching(const Mates& mate) {
    Matching m;
    for (EdgeId e : mate) {
        if (e != 0) {
            m.edges.push_back(e);
        }
    }
    std::sort(m.edges.begin(), m.edges.end());
    m.edges.erase(std::unique(m.edges.begin(), m.edges.end()), m.edges.end());
    return m;
}

// Vertices reachable from the unmatched vertices of `from` by alternating
// paths (non-matching edge out of `from`, matching edge back).
std::vector<char> alternating_reach(const Graph& g, const Mates& mate, Side from) {
    std::vector<char> reached(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<Vertex> queue;
    for (Vertex v : g.part(from)) {
        if (mate[static_cast<std::size_t>(v)] == 0) {
            reached[static_cast<std::size_t>(v)] = 1;
            queue.push(v);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (EdgeId e : g.incident(v)) {
            if (e == mate[static_cast<std::size_t>(v)]) {
                continue;
            }
            const Vertex w = g.edge(e).other(v);
            if (reached[static_cast<std::size_t>(w)]) {
                continue;
            }
            reached[static_cast<std::size_t>(w)] = 1;
            const EdgeId back = mate[static_cast<std::size_t>(w)];
            if (back != 0) {
                const Vertex next = g.edge(back).other(w);
                if (!reached[static_cast<std::size_t>(next)]) {
                    reached[static_cast<std::size_t>(next)] = 1;
                    queue.push(next);
                }
            }
        }
    }
    return reached;
}

}  // namespace

bool is_matching(const Graph& g, const std::vector<EdgeId>& edges) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : edges) {
        if (e < 1 || e > g.edge_count()) {
            return false;
        }
        for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
            if (used[static_cast<std::size_t>(v)]) {
                return false;
            }
            used[static_cast<std::size_t>(v)] = 1;
        }
    }
    return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.vertex_count()) {
            return false;
        }
        in[static_cast<std::size_t>(v)] = 1;
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return in[static_cast<std::size_t>(e.u)] || in[static_cast<std::size_t>(e.v)];
    });
}

Matching maximum_matching(const Graph& g) {
    require_bipartite(g, "maximum_matching");
    return to_matching(Kuhn(g).run());
}

VertexCoverWitness minimum_vertex_cover(const Graph& g) {
    require_bipartite(g, "minimum_vertex_cover");
    const Mates mate = Kuhn(g).run();
    const auto reached = alternating_reach(g, mate, Side::X);
    VertexCoverWitness cover;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const bool r = reached[static_cast<std::size_t>(v)];
        if ((g.side(v) == Side::X && !r) || (g.side(v) == Side::Y && r)) {
            cover.vertices.push_back(v);
        }
    }
    cover.certified_size = static_cast<int>(cover.vertices.size());
    if (!is_vertex_cover(g, cover.vertices) || cover.certified_size != to_matching(mate).size()) {
        throw std::logic_error("minimum_vertex_cover: Koenig construction failed certification");
    }
    return cover;
}

DeficiencyWitness deficiency_witness(const Graph& g) {
    require_bipartite(g, "deficiency_witness");
    DeficiencyWitness w;
    const Side big = g.part(Side::X).size() >= g.part(Side::Y).size() ? Side::X : Side::Y;
    w.swapped_sides = big == Side::Y;

    const Mates mate = Kuhn(g).run();
    const int nu = to_matching(mate).size();
    const auto reached = alternating_reach(g, mate, big);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (reached[static_cast<std::size_t>(v)]) {
            (g.side(v) == big ? w.subset : w.neighborhood).push_back(v);
        }
    }
    w.deficiency = static_cast<int>(w.subset.size()) - static_cast<int>(w.neighborhood.size());

    // N(S) must be exactly the neighborhood, the identity must hold, and
    // N(S) + (big side - S) must be a cover of size nu.
    std::vector<Vertex> actual;
    for (Vertex s : w.subset) {
        const auto nb = g.neighbors(s);
        actual.insert(actual.end(), nb.begin(), nb.end());
    }
    std::sort(actual.begin(), actual.end());
    actual.erase(std::unique(actual.begin(), actual.end()), actual.end());

    std::vector<Vertex> cover = w.neighborhood;
    for (Vertex v : g.part(big)) {
        if (!reached[static_cast<std::size_t>(v)]) {
            cover.push_back(v);
        }
    }
    const int side_size = static_cast<int>(g.part(big).size());
    if (actual != w.neighborhood || w.deficiency != side_size - nu || static_cast<int>(cover.size()) != nu ||
        !is_vertex_cover(g, cover)) {
        throw std::logic_error("deficiency_witness: witness failed certification");
    }
    return w;
}

namespace {

class SaturationSearch {
public:
    SaturationSearch(const Graph& g, Mates mate) : g_(g), mate_(std::move(mate)) {
        max_degree_ = g.max_degree();
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            heavy_.push_back(g.degree(v) == max_degree_ ? 1 : 0);
        }
    }

    int weight(EdgeId e) const {
        return heavy_[static_cast<std::size_t>(g_.edge(e).u)] + heavy_[static_cast<std::size_t>(g_.edge(e).v)];
    }

    bool covered(Vertex v) const { return mate_[static_cast<std::size_t>(v)] != 0; }

    // One augmentation along a maximum-gain augmenting path (X free to Y free).
    // Longest path by Bellman-Ford; the residual graph of a maximum-weight
    // matching of fixed size has no positive cycles.
    bool augment_max_gain() {
        const int n = g_.vertex_count();
        constexpr int kUnset = std::numeric_limits<int>::min();
        std::vector<int> gain(static_cast<std::size_t>(n), kUnset);
        std::vector<EdgeId> via(static_cast<std::size_t>(n), 0);
        for (Vertex x : g_.part(Side::X)) {
            if (!covered(x)) {
                gain[static_cast<std::size_t>(x)] = 0;
            }
        }
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (EdgeId e = 1; e <= g_.edge_count(); ++e) {
                const Edge& ed = g_.edge(e);
                const Vertex x = g_.side(ed.u) == Side::X ? ed.u : ed.v;
                const Vertex y = ed.other(x);
                const bool in_m = mate_[static_cast<std::size_t>(x)] == e;
                // Non-matching edges run X -> Y, matching edges Y -> X.
                const Vertex from = in_m ? y : x;
                const Vertex to = in_m ? x : y;
                const int base = gain[static_cast<std::size_t>(from)];
                if (base == kUnset) {
                    continue;
                }
                const int cand = base + (in_m ? -weight(e) : weight(e));
                if (cand > gain[static_cast<std::size_t>(to)]) {
                    gain[static_cast<std::size_t>(to)] = cand;
                    via[static_cast<std::size_t>(to)] = e;
                    changed = true;
                }
            }
            if (!changed) {
                break;
            }
        }
        Vertex end = -1;
        for (Vertex y : g_.part(Side::Y)) {
            if (!covered(y) && gain[static_cast<std::size_t>(y)] != kUnset &&
                (end < 0 || gain[static_cast<std::size_t>(y)] > gain[static_cast<std::size_t>(end)])) {
                end = y;
            }
        }
        if (end < 0) {
            return false;
        }
        // Walk back, flipping edges.
        std::vector<EdgeId> path;
        Vertex v = end;
        while (via[static_cast<std::size_t>(v)] != 0) {
            const EdgeId e = via[static_cast<std::size_t>(v)];
            path.push_back(e);
            v = g_.edge(e).other(v);
            if (g_.side(v) == Side::X && !covered(v)) {
                break;
            }
        }
        flip(path);
        return true;
    }

    // Vertex-replacement exchange: find an uncovered heavy vertex v and an even
    // alternating walk from v to a covered light vertex w, then flip it.
    bool exchange_once() {
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (heavy_[static_cast<std::size_t>(v)] && !covered(v) && g_.degree(v) > 0) {
                if (auto path = replacement_walk(v)) {
                    flip(*path);
                    ++exchanges_;
                    return true;
                }
            }
        }
        return false;
    }

    int saturated() const {
        int count = 0;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            count += heavy_[static_cast<std::size_t>(v)] && covered(v);
        }
        return count;
    }

    const Mates& mates() const { return mate_; }
    int max_degree() const { return max_degree_; }
    int exchanges() const { return exchanges_; }

private:
    // BFS over v's side: from a vertex p, each non-matching edge p-u to a
    // covered u leads on to u's partner. Neighbors are taken in edge order, so
    // the direct swap (walk of length two) is always tried first.
    std::optional<std::vector<EdgeId>> replacement_walk(Vertex v) const {
        const int n = g_.vertex_count();
        std::vector<EdgeId> via_out(static_cast<std::size_t>(n), 0);   // non-matching edge into u
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<Vertex> queue;
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push(v);
        while (!queue.empty()) {
            const Vertex p = queue.front();
            queue.pop();
            for (EdgeId e : g_.incident(p)) {
                if (e == mate_[static_cast<std::size_t>(p)]) {
                    continue;
                }
                const Vertex u = g_.edge(e).other(p);
                if (seen[static_cast<std::size_t>(u)] || !covered(u)) {
                    continue;
                }
                seen[static_cast<std::size_t>(u)] = 1;
                via_out[static_cast<std::size_t>(u)] = e;
                const EdgeId back = mate_[static_cast<std::size_t>(u)];
                const Vertex w = g_.edge(back).other(u);
                if (seen[static_cast<std::size_t>(w)]) {
                    continue;
                }
                seen[static_cast<std::size_t>(w)] = 1;
                if (!heavy_[static_cast<std::size_t>(w)]) {
                    std::vector<EdgeId> path{back};
                    Vertex cur = u;
                    while (true) {
                        const EdgeId in = via_out[static_cast<std::size_t>(cur)];
                        path.push_back(in);
                        const Vertex prev = g_.edge(in).other(cur);
                        if (prev == v) {
                            break;
                        }
                        path.push_back(mate_[static_cast<std::size_t>(prev)]);
                        cur = g_.edge(mate_[static_cast<std::size_t>(prev)]).other(prev);
                    }
                    return path;
                }
                queue.push(w);
            }
        }
        return std::nullopt;
    }

    void flip(const std::vector<EdgeId>& path) {
        std::vector<EdgeId> removed;
        std::vector<EdgeId> added;
        for (EdgeId e : path) {
            const Edge& ed = g_.edge(e);
            (mate_[static_cast<std::size_t>(ed.u)] == e ? removed : added).push_back(e);
        }
        for (EdgeId e : removed) {
            mate_[static_cast<std::size_t>(g_.edge(e).u)] = 0;
            mate_[static_cast<std::size_t>(g_.edge(e).v)] = 0;
        }
        for (EdgeId e : added) {
            mate_[static_cast<std::size_t>(g_.edge(e).u)] = e;
            mate_[static_cast<std::size_t>(g_.edge(e).v)] = e;
        }
    }

    const Graph& g_;
    Mates mate_;
    std::vector<int> heavy_;
    int max_degree_ = 0;
    int exchanges_ = 0;
};

}  // namespace

std::optional<SaturatingMatching> saturating_matching(const Graph& g, int target_size) {
    require_bipartite(g, "saturating_matching");
    if (target_size < 1) {
        throw PreconditionError("saturating_matching: target_size must be >= 1");
    }
    const Mates maximum = Kuhn(g).run();
    const int nu = to_matching(maximum).size();
    if (nu < target_size) {
        return std::nullopt;
    }

    SaturationSearch search(g, nu == target_size ? maximum : Mates(static_cast<std::size_t>(g.vertex_count()), 0));
    if (nu != target_size) {
        for (int i = 0; i < target_size; ++i) {
            if (!search.augment_max_gain()) {
                throw std::logic_error("saturating_matching: augmentation stalled below the matching number");
            }
        }
    }
    while (search.exchange_once()) {
    }

    SaturatingMatching out;
    out.matching = to_matching(search.mates());
    out.max_degree = search.max_degree();
    out.saturated = search.saturated();
    out.exchanges = search.exchanges();
    if (out.matching.size() != target_size || !is_matching(g, out.matching.edges)) {
        throw std::logic_error("saturating_matching: produced an invalid matching");
    }
    return out;
}

int matching_number_exhaustive(const Graph& g) {
    const detail::ConflictTable table(g);
    return detail::matching_number(table, detail::prefix_mask(g.edge_count()));
}

int matching_number(const Graph& g) {
    return g.is_bipartite() ? maximum_matching(g).size() : matching_number_exhaustive(g);
}

}  // namespace rainbowlab
