#pragma once

#include <span>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

using Color = int;

// Surjective edge coloring with colors 1..t.
class Coloring {
public:
    Coloring() = default;

    // colors[i] is the color of edge i+1. Throws PreconditionError unless the
    // values are exactly {1..t} for some t >= 1.
    explicit Coloring(std::vector<Color> colors);

    int edge_count() const { return static_cast<int>(colors_.size()); }
    int color_count() const { return color_count_; }
    Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e - 1)]; }
    std::span<const Color> colors() const { return colors_; }

    // Edge ids of each color class, ascending; classes()[c-1] is color c.
    std::vector<std::vector<EdgeId>> classes() const;

    // Relabels colors by first appearance, giving the restricted-growth form.
    Coloring canonical() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    int color_count_ = 0;
};

// Throws PreconditionError when the coloring does not cover g's edges.
void require_matches(const Graph& g, const Coloring& c);

}  // namespace rainbowlab
