#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// Line-oriented text formats.
//
//   graph <vertex_count> <edge_count>
//   bipartite <|X|> <|Y|> <edge_count>
//   u v            (one line per edge, 0-based ids; edge index = 1 + position)
//
//   coloring <edge_count> <color_count>
//   edge_index color_index   (both 1-based, one line per edge)
//
// Blank lines and '#' comments are ignored. A comment of the form
// `# meta key=value ...` is collected into GraphFile::meta so that tools can
// remember which family a file was generated from.

struct GraphFile {
    Graph graph;
    std::map<std::string, std::string> meta;
};

// A `graph` header gets its bipartition inferred (BFS two-coloring); a
// bipartite graph whose X side is not a prefix is therefore written with the
// `graph` header.
void write_graph(std::ostream& out, const Graph& g, const std::map<std::string, std::string>& meta = {});
GraphFile read_graph(std::istream& in);

void write_coloring(std::ostream& out, const Coloring& c);
Coloring read_coloring(std::istream& in);

GraphFile load_graph(const std::string& path);
Coloring load_coloring(const std::string& path);

}  // namespace rainbowlab
