#include "kindep/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace kindep {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

bool is_comment(const std::string& first, bool dimacs) {
    return first.starts_with('#') || (dimacs && first == "c");
}

// Returns the next non-blank, non-comment line, or false at end of input.
bool next_line(std::istream& in, std::size_t& counter, Line& out, bool dimacs) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++counter;
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        for (std::string tok; ss >> tok;) tokens.push_back(tok);
        if (tokens.empty() || is_comment(tokens.front(), dimacs)) continue;
        out = Line{counter, std::move(tokens)};
        return true;
    }
    return false;
}

std::size_t to_index(const std::string& token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    }
    return value;
}

Graph finish(std::size_t n, const std::vector<Edge>& edges, std::size_t line) {
    try {
        return Graph::build(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::size_t counter = 0;
    Line line;
    if (!next_line(in, counter, line, false)) {
        throw ParseError(counter, "missing header line 'n m'");
    }
    if (line.tokens.size() != 2) {
        throw ParseError(line.number, "header must be 'n m'");
    }
    const std::size_t n = to_index(line.tokens[0], line.number);
    const std::size_t m = to_index(line.tokens[1], line.number);
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        if (!next_line(in, counter, line, false)) {
            throw ParseError(counter, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
        }
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, "edge line must be 'u v'");
        }
        Vertex u = to_index(line.tokens[0], line.number);
        Vertex v = to_index(line.tokens[1], line.number);
        if (u >= n || v >= n) {
            throw ParseError(line.number, "vertex index out of range [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
    }
    if (next_line(in, counter, line, false)) {
        throw ParseError(line.number, "unexpected content after " + std::to_string(m) + " edges");
    }
    return finish(n, edges, counter);
}

Graph read_dimacs(std::istream& in) {
    std::size_t counter = 0;
    Line line;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    while (next_line(in, counter, line, true)) {
        const std::string& kind = line.tokens.front();
        if (kind == "p") {
            if (have_header) throw ParseError(line.number, "duplicate 'p' line");
            if (line.tokens.size() != 4 || (line.tokens[1] != "edge" && line.tokens[1] != "col")) {
                throw ParseError(line.number, "header must be 'p edge n m'");
            }
            n = to_index(line.tokens[2], line.number);
            m = to_index(line.tokens[3], line.number);
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) throw ParseError(line.number, "'e' line before 'p' header");
            if (line.tokens.size() != 3) throw ParseError(line.number, "edge line must be 'e u v'");
            std::size_t u = to_index(line.tokens[1], line.number);
            std::size_t v = to_index(line.tokens[2], line.number);
            if (u == 0 || v == 0 || u > n || v > n) {
                throw ParseError(line.number, "vertex index out of range [1," + std::to_string(n) + "]");
            }
            if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(line.number, "unknown line type '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError(counter, "missing 'p edge n m' header");
    if (edges.size() != m) {
        throw ParseError(counter, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return finish(n, edges, counter);
}

Graph read_graph(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream probe(text);
    std::size_t counter = 0;
    Line first;
    bool dimacs = false;
    // DIMACS files may open with "c" comments, which the edge-list reader
    // would reject, so probe with DIMACS comment rules.
    if (next_line(probe, counter, first, true)) {
        dimacs = first.tokens.front() == "p";
    }
    std::istringstream in2(text);
    return dimacs ? read_dimacs(in2) : read_edge_list(in2);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open graph file '" + path + "'");
    }
    return read_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
}

VertexSet read_vertex_set(std::istream& in) {
    VertexSet out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        for (std::string tok; ss >> tok;) out.push_back(to_index(tok, number));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void write_vertex_set(std::ostream& out, const VertexSet& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out << (i ? " " : "") << vertices[i];
    }
    out << '\n';
}

}  // namespace kindep
