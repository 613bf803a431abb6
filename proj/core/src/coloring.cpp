#include "rainbowlab/coloring.hpp"

#include <algorithm>
#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) {
        throw PreconditionError("coloring must color at least one edge");
    }
    const Color top = *std::max_element(colors_.begin(), colors_.end());
    std::vector<char> used(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1) {
            throw PreconditionError("edge " + std::to_string(i + 1) + " has color " + std::to_string(colors_[i]) +
                                    "; colors start at 1");
        }
        used[static_cast<std::size_t>(colors_[i])] = 1;
    }
    for (Color c = 1; c <= top; ++c) {
        if (!used[static_cast<std::size_t>(c)]) {
            throw PreconditionError("color " + std::to_string(c) + " is unused; colorings must be surjective onto 1.." +
                                    std::to_string(top));
        }
    }
    color_count_ = top;
}

std::vector<std::vector<EdgeId>> Coloring::classes() const {
    std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(color_count_));
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        out[static_cast<std::size_t>(colors_[i] - 1)].push_back(static_cast<EdgeId>(i + 1));
    }
    return out;
}

Coloring Coloring::canonical() const {
    std::vector<Color> remap(static_cast<std::size_t>(color_count_) + 1, 0);
    std::vector<Color> out;
    out.reserve(colors_.size());
    Color next = 1;
    for (Color c : colors_) {
        auto& r = remap[static_cast<std::size_t>(c)];
        if (r == 0) {
            r = next++;
        }
        out.push_back(r);
    }
    return Coloring(std::move(out));
}

void require_matches(const Graph& g, const Coloring& c) {
    if (c.edge_count() != g.edge_count()) {
        throw PreconditionError("coloring covers " + std::to_string(c.edge_count()) + " edges but the graph has " +
                                std::to_string(g.edge_count()));
    }
}

}  // namespace rainbowlab
