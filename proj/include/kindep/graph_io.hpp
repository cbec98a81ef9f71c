#pragma once

// Text formats for graphs.
//
// Edge list: first non-comment line "n m", then m lines "u v" with 0-based
// indices. DIMACS: "p edge n m" header, "e u v" lines with 1-based indices,
// "c" comment lines. In both, lines starting with '#' are ignored.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kindep/graph.hpp"

namespace kindep {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class GraphFormat { edge_list, dimacs };

Graph read_edge_list(std::istream& in);
Graph read_dimacs(std::istream& in);
// Chooses DIMACS when the first non-comment line starts with "p".
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

// Vertex set files: whitespace-separated 0-based indices, '#' comments.
VertexSet read_vertex_set(std::istream& in);
void write_vertex_set(std::ostream& out, const VertexSet& vertices);

}  // namespace kindep
