#pragma once

// Simple undirected graphs on dense 0-based vertex indices.
//
// A Graph is a value: it is immutable after construction and every
// operation that "changes" a graph returns a new one. Adjacency lists are
// sorted, which fixes the iteration order everything downstream relies on
// for reproducible tie-breaking.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kindep/rational.hpp"

namespace kindep {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Graph;

// A graph derived from another one, with the map from its vertices back to
// the parent's vertices (to_original[new_index] == old_index).
struct Subgraph;

class Graph {
public:
    Graph() = default;
    // Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    // Throws GraphError on out-of-range indices or self-loops. Duplicate
    // edges (in either orientation) collapse to one.
    static Graph build(std::size_t n, std::span<const Edge> edges);
    static Graph build(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;
    // 2e/n; throws GraphError for the empty graph.
    Rational avg_degree() const;

    std::span<const Vertex> neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_regular() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;

    void check_vertex(Vertex v) const;
};

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_original;

    // Maps a vertex set of `graph` back to parent indices (sorted).
    VertexSet lift(std::span<const Vertex> vertices) const;
};

// S must be a subset of V(G); duplicates are ignored. The kept vertices are
// renumbered in increasing order of their original index.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph remove_vertex(const Graph& g, Vertex v);

// Vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);
// q disjoint copies; copy i occupies [i*n, (i+1)*n).
Graph copies(std::size_t q, const Graph& g);
Graph complement(const Graph& g);
// Removes the edges of h placed into g via placement[i] (vertex i of h maps
// to vertex placement[i] of g). Throws GraphError if an edge is missing.
Graph remove_edges_of(const Graph& g, const Graph& h, std::span<const Vertex> placement);

// Length of a shortest cycle; std::nullopt for forests (infinite girth).
std::optional<std::size_t> girth(const Graph& g);

// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// True iff the subgraph induced by S has maximum degree at most k.
// O(sum of deg(v) over S). Throws GraphError if S is not a subset of V(G).
bool verify_k_independent(const Graph& g, std::span<const Vertex> vertices, std::size_t k);

// Full scan of the representation invariants (symmetry, no loops, ranges,
// sortedness, edge count). Used by tests.
bool check_invariants(const Graph& g);

}  // namespace kindep
