#include "rainbowlab/rainbow.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "edge_masks.hpp"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/matching.hpp"

namespace rainbowlab {

namespace {

void check_inputs(const Graph& g, const Coloring& c, int m) {
    require_matches(g, c);
    if (m < 1) {
        throw PreconditionError("rainbow matching size m must be >= 1");
    }
}

class RainbowBacktracker {
public:
    RainbowBacktracker(const Graph& g, const Coloring& c, int m)
        : g_(g),
          c_(c),
          m_(m),
          vertex_used_(static_cast<std::size_t>(g.vertex_count()), 0),
          color_used_(static_cast<std::size_t>(c.color_count()) + 1, 0) {
        if (!g.is_bipartite() && g.edge_count() <= detail::kMaxMaskEdges) {
            table_.emplace(g);
        }
    }

    std::optional<RainbowWitness> run() {
        if (search(1)) {
            RainbowWitness w;
            w.edges = chosen_;
            for (EdgeId e : chosen_) {
                w.colors.push_back(c_.color(e));
            }
            return w;
        }
        return std::nullopt;
    }

private:
    bool available(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        return !vertex_used_[static_cast<std::size_t>(ed.u)] && !vertex_used_[static_cast<std::size_t>(ed.v)] &&
               !color_used_[static_cast<std::size_t>(c_.color(e))];
    }

    // Upper bounds on what the edges from `from` onward can still contribute.
    bool can_reach(EdgeId from, int need) const {
        std::vector<EdgeId> rest;
        std::set<Color> colors;
        for (EdgeId e = from; e <= g_.edge_count(); ++e) {
            if (available(e)) {
                rest.push_back(e);
                colors.insert(c_.color(e));
            }
        }
        if (static_cast<int>(rest.size()) < need || static_cast<int>(colors.size()) < need) {
            return false;
        }
        return remaining_matching_number(rest) >= need;
    }

    int remaining_matching_number(const std::vector<EdgeId>& rest) const {
        if (table_) {
            detail::Mask mask = 0;
            for (EdgeId e : rest) {
                mask |= detail::bit(e - 1);
            }
            return detail::matching_number(*table_, mask);
        }
        std::vector<Edge> edges;
        for (EdgeId e : rest) {
            edges.push_back(g_.edge(e));
        }
        if (!g_.is_bipartite()) {
            // Large non-bipartite graph: fall back to the trivial vertex bound.
            std::set<Vertex> touched;
            for (const Edge& e : edges) {
                touched.insert(e.u);
                touched.insert(e.v);
            }
            return static_cast<int>(touched.size()) / 2;
        }
        return maximum_matching(Graph(g_.vertex_count(), std::move(edges), g_.sides())).size();
    }

    bool search(EdgeId from) {
        const int need = m_ - static_cast<int>(chosen_.size());
        if (need == 0) {
            return true;
        }
        if (!can_reach(from, need)) {
            return false;
        }
        for (EdgeId e = from; e <= g_.edge_count(); ++e) {
            if (!available(e)) {
                continue;
            }
            take(e, 1);
            chosen_.push_back(e);
            if (search(e + 1)) {
                return true;
            }
            chosen_.pop_back();
            take(e, 0);
        }
        return false;
    }

    void take(EdgeId e, char flag) {
        const Edge& ed = g_.edge(e);
        vertex_used_[static_cast<std::size_t>(ed.u)] = flag;
        vertex_used_[static_cast<std::size_t>(ed.v)] = flag;
        color_used_[static_cast<std::size_t>(c_.color(e))] = flag;
    }

    const Graph& g_;
    const Coloring& c_;
    int m_;
    std::vector<char> vertex_used_;
    std::vector<char> color_used_;
    std::vector<EdgeId> chosen_;
    std::optional<detail::ConflictTable> table_;
};

}  // namespace

bool is_rainbow_matching(const Graph& g, const Coloring& c, const std::vector<EdgeId>& edges) {
    if (!is_matching(g, edges)) {
        return false;
    }
    std::set<Color> colors;
    for (EdgeId e : edges) {
        if (!colors.insert(c.color(e)).second) {
            return false;
        }
    }
    return true;
}

std::optional<RainbowWitness> find_rainbow_matching(const Graph& g, const Coloring& c, int m) {
    check_inputs(g, c, m);
    if (m > c.color_count()) {
        return std::nullopt;
    }
    if ((g.is_bipartite() || g.edge_count() <= detail::kMaxMaskEdges) && m > matching_number(g)) {
        return std::nullopt;
    }
    return RainbowBacktracker(g, c, m).run();
}

std::vector<EdgeId> representative_edges(const Coloring& c) {
    std::vector<EdgeId> out;
    for (const auto& cls : c.classes()) {
        out.push_back(cls.front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph representative_subgraph(const Graph& g, const Coloring& c) {
    require_matches(g, c);
    std::vector<Edge> edges;
    for (EdgeId e : representative_edges(c)) {
        edges.push_back(g.edge(e));
    }
    return Graph(g.vertex_count(), std::move(edges), g.sides());
}

namespace {

// One edge from each listed color class, pairwise disjoint.
bool distinct_representatives(const Graph& g, const std::vector<std::vector<EdgeId>>& classes,
                              const std::vector<int>& picked_colors, std::size_t at, std::vector<char>& used) {
    if (at == picked_colors.size()) {
        return true;
    }
    for (EdgeId e : classes[static_cast<std::size_t>(picked_colors[at])]) {
        const Edge& ed = g.edge(e);
        if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)]) {
            continue;
        }
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
        const bool ok = distinct_representatives(g, classes, picked_colors, at + 1, used);
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 0;
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool enumerate_representative_choices(const Graph& g, const Coloring& c, int m) {
    check_inputs(g, c, m);
    if (g.edge_count() > 20) {
        throw PreconditionError("enumerate_representative_choices is limited to 20 edges");
    }
    const int t = c.color_count();
    if (m > t) {
        return false;
    }
    const auto classes = c.classes();
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    // Walk all m-subsets of {0..t-1} via a selection vector.
    std::vector<char> select(static_cast<std::size_t>(t), 0);
    std::fill(select.begin(), select.begin() + m, 1);
    do {
        std::vector<int> picked;
        for (int i = 0; i < t; ++i) {
            if (select[static_cast<std::size_t>(i)]) {
                picked.push_back(i);
            }
        }
        if (distinct_representatives(g, classes, picked, 0, used)) {
            return true;
        }
    } while (std::prev_permutation(select.begin(), select.end()));
    return false;
}

}  // namespace rainbowlab
