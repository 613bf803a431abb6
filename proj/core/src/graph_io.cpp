#include "rainbowlab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;
    std::map<std::string, std::string>* meta = nullptr;

    // Next non-blank, non-comment line, tokenized.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) {
                if (meta) {
                    collect_meta(line.substr(hash + 1));
                }
                line.resize(hash);
            }
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) {
                tokens.push_back(t);
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    void collect_meta(const std::string& comment) {
        std::istringstream ss(comment);
        std::string word;
        if (!(ss >> word) || word != "meta") {
            return;
        }
        while (ss >> word) {
            const auto eq = word.find('=');
            if (eq != std::string::npos) {
                (*meta)[word.substr(0, eq)] = word.substr(eq + 1);
            }
        }
    }

    int to_int(const std::string& s, const char* what) const {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size()) {
            throw ParseError(std::string("expected integer ") + what + ", got '" + s + "'", line_no);
        }
        return value;
    }
};

}  // namespace

void write_graph(std::ostream& out, const Graph& g, const std::map<std::string, std::string>& meta) {
    if (!meta.empty()) {
        out << "# meta";
        for (const auto& [k, v] : meta) {
            out << ' ' << k << '=' << v;
        }
        out << '\n';
    }
    if (g.has_contiguous_bipartition()) {
        out << "bipartite " << g.part(Side::X).size() << ' ' << g.part(Side::Y).size() << ' ' << g.edge_count() << '\n';
    } else {
        out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    }
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

GraphFile read_graph(std::istream& in) {
    GraphFile file;
    LineReader reader{in, 0, &file.meta};
    std::vector<std::string> tok;
    if (!reader.next(tok)) {
        throw ParseError("missing graph header", reader.line_no);
    }

    int vertex_count = 0;
    int edge_count = 0;
    std::optional<std::vector<Side>> sides;
    if (tok[0] == "graph" && tok.size() == 3) {
        vertex_count = reader.to_int(tok[1], "vertex count");
        edge_count = reader.to_int(tok[2], "edge count");
    } else if (tok[0] == "bipartite" && tok.size() == 4) {
        const int nx = reader.to_int(tok[1], "|X|");
        const int ny = reader.to_int(tok[2], "|Y|");
        edge_count = reader.to_int(tok[3], "edge count");
        if (nx < 0 || ny < 0) {
            throw ParseError("side sizes must be non-negative", reader.line_no);
        }
        vertex_count = nx + ny;
        sides.emplace(static_cast<std::size_t>(vertex_count), Side::Y);
        std::fill_n(sides->begin(), nx, Side::X);
    } else {
        throw ParseError("expected 'graph <V> <E>' or 'bipartite <X> <Y> <E>'", reader.line_no);
    }
    if (vertex_count < 0 || edge_count < 0) {
        throw ParseError("counts must be non-negative", reader.line_no);
    }

    std::vector<Edge> edges;
    while (reader.next(tok)) {
        if (tok.size() != 2) {
            throw ParseError("expected 'u v'", reader.line_no);
        }
        edges.push_back({reader.to_int(tok[0], "vertex"), reader.to_int(tok[1], "vertex")});
    }
    if (static_cast<int>(edges.size()) != edge_count) {
        throw ParseError("header declares " + std::to_string(edge_count) + " edges but file has " +
                             std::to_string(edges.size()),
                         reader.line_no);
    }
    if (!sides) {
        sides = infer_bipartition(vertex_count, edges);
    }
    try {
        file.graph = Graph(vertex_count, std::move(edges), std::move(sides));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), reader.line_no);
    }
    return file;
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << "coloring " << c.edge_count() << ' ' << c.color_count() << '\n';
    for (EdgeId e = 1; e <= c.edge_count(); ++e) {
        out << e << ' ' << c.color(e) << '\n';
    }
}

Coloring read_coloring(std::istream& in) {
    LineReader reader{in};
    std::vector<std::string> tok;
    if (!reader.next(tok) || tok.size() != 3 || tok[0] != "coloring") {
        throw ParseError("expected 'coloring <edge_count> <color_count>'", reader.line_no);
    }
    const int edge_count = reader.to_int(tok[1], "edge count");
    const int color_count = reader.to_int(tok[2], "color count");
    if (edge_count < 1 || color_count < 1) {
        throw ParseError("edge and color counts must be positive", reader.line_no);
    }
    std::vector<Color> colors(static_cast<std::size_t>(edge_count), 0);
    int seen = 0;
    while (reader.next(tok)) {
        if (tok.size() != 2) {
            throw ParseError("expected 'edge_index color_index'", reader.line_no);
        }
        const int e = reader.to_int(tok[0], "edge index");
        const int c = reader.to_int(tok[1], "color index");
        if (e < 1 || e > edge_count) {
            throw ParseError("edge index " + tok[0] + " out of range", reader.line_no);
        }
        if (c < 1 || c > color_count) {
            throw ParseError("color index " + tok[1] + " out of range 1.." + std::to_string(color_count),
                             reader.line_no);
        }
        auto& slot = colors[static_cast<std::size_t>(e - 1)];
        if (slot != 0) {
            throw ParseError("edge " + tok[0] + " colored twice", reader.line_no);
        }
        slot = c;
        ++seen;
    }
    if (seen != edge_count) {
        throw ParseError("coloring assigns " + std::to_string(seen) + " of " + std::to_string(edge_count) + " edges",
                         reader.line_no);
    }
    try {
        Coloring coloring(std::move(colors));
        if (coloring.color_count() != color_count) {
            throw PreconditionError("header declares " + std::to_string(color_count) + " colors but " +
                                    std::to_string(coloring.color_count()) + " are used");
        }
        return coloring;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), reader.line_no);
    }
}

GraphFile load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path, 0);
    }
    return read_graph(in);
}

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path, 0);
    }
    return read_coloring(in);
}

}  // namespace rainbowlab
