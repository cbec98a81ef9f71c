#include "kindep/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace kindep {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

Graph Graph::build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v >= order()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(order()) + ")");
    }
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, list.size());
    }
    return best;
}

Rational Graph::avg_degree() const {
    if (order() == 0) {
        throw GraphError("average degree of the empty graph is undefined");
    }
    return Rational(static_cast<std::int64_t>(2 * edge_count_), static_cast<std::int64_t>(order()));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_regular() const {
    if (order() == 0) return true;
    std::size_t d = adjacency_[0].size();
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [d](const auto& list) { return list.size() == d; });
}

VertexSet Subgraph::lift(std::span<const Vertex> vertices) const {
    VertexSet out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) {
        out.push_back(to_original.at(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> new_index(g.order(), none);
    for (Vertex v : vertices) {
        if (v >= g.order()) {
            throw GraphError("vertex set is not a subset of V(G): " + std::to_string(v));
        }
        new_index[v] = 0;
    }
    Subgraph sub;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (new_index[v] != none) {
            new_index[v] = sub.to_original.size();
            sub.to_original.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (Vertex nv = 0; nv < sub.to_original.size(); ++nv) {
        for (Vertex w : g.neighbors(sub.to_original[nv])) {
            if (new_index[w] != none && nv < new_index[w]) {
                edges.emplace_back(nv, new_index[w]);
            }
        }
    }
    sub.graph = Graph::build(sub.to_original.size(), edges);
    return sub;
}

Subgraph remove_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw GraphError("cannot remove vertex " + std::to_string(v) + ": not in graph");
    }
    VertexSet keep;
    keep.reserve(g.order() - 1);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const std::size_t shift = g.order();
    for (const auto& [u, v] : h.edges()) {
        edges.emplace_back(u + shift, v + shift);
    }
    return Graph::build(g.order() + h.order(), edges);
}

Graph copies(std::size_t q, const Graph& g) {
    std::vector<Edge> base = g.edges();
    std::vector<Edge> edges;
    edges.reserve(q * base.size());
    for (std::size_t i = 0; i < q; ++i) {
        const std::size_t shift = i * g.order();
        for (const auto& [u, v] : base) {
            edges.emplace_back(u + shift, v + shift);
        }
    }
    return Graph::build(q * g.order(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nbrs = g.neighbors(u);
        auto it = nbrs.begin();
        for (Vertex v = u + 1; v < g.order(); ++v) {
            while (it != nbrs.end() && *it < v) ++it;
            if (it == nbrs.end() || *it != v) edges.emplace_back(u, v);
        }
    }
    return Graph::build(g.order(), edges);
}

Graph remove_edges_of(const Graph& g, const Graph& h, std::span<const Vertex> placement) {
    if (placement.size() != h.order()) {
        throw GraphError("placement size does not match the removed subgraph's order");
    }
    std::vector<Edge> removed;
    for (const auto& [a, b] : h.edges()) {
        Vertex u = placement[a];
        Vertex v = placement[b];
        if (u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v)) {
            throw GraphError("cannot remove non-existent edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ")");
        }
        removed.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(removed.begin(), removed.end());
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
    }
    return Graph::build(g.order(), kept);
}

std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    const std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[s] = 0;
        parent[s] = s;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    // Non-tree edge closes a closed walk through s of length
                    // dist[u]+dist[w]+1; the minimum over all s is the girth.
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == unseen) return std::nullopt;
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : g.neighbors(comp[i])) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool verify_k_independent(const Graph& g, std::span<const Vertex> vertices, std::size_t k) {
    std::vector<bool> in_set(g.order(), false);
    for (Vertex v : vertices) {
        if (v >= g.order()) {
            throw GraphError("vertex set is not a subset of V(G): " + std::to_string(v));
        }
        in_set[v] = true;
    }
    for (Vertex v : vertices) {
        std::size_t inside = 0;
        for (Vertex w : g.neighbors(v)) {
            if (in_set[w] && ++inside > k) return false;
        }
    }
    return true;
}

bool check_invariants(const Graph& g) {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nbrs = g.neighbors(u);
        if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
        for (Vertex v : nbrs) {
            if (v >= g.order() || v == u) return false;
            if (!g.has_edge(v, u)) return false;
        }
        degree_sum += nbrs.size();
    }
    return degree_sum % 2 == 0 && degree_sum / 2 == g.edge_count();
}

}  // namespace kindep
