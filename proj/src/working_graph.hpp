#pragma once

// Mutable view used inside the deletion algorithms: a fixed graph plus an
// active-vertex mask with degrees kept relative to the active set.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep::detail {

class WorkingGraph {
public:
    explicit WorkingGraph(const Graph& g) : graph_(g), active_(g.order(), true), degree_(g.order()) {
        for (Vertex v = 0; v < g.order(); ++v) degree_[v] = g.degree(v);
        active_count_ = g.order();
        edges_ = g.edge_count();
    }

    std::size_t active_count() const { return active_count_; }
    std::size_t edge_count() const { return edges_; }
    std::size_t degree(Vertex v) const { return degree_[v]; }
    bool active(Vertex v) const { return active_[v]; }

    void remove(Vertex v) {
        active_[v] = false;
        --active_count_;
        edges_ -= degree_[v];
        for (Vertex w : graph_.neighbors(v)) {
            if (active_[w]) --degree_[w];
        }
        degree_[v] = 0;
    }

    // Active vertex of maximum degree, smallest index on ties. Requires at
    // least one active vertex.
    Vertex max_degree_vertex() const {
        Vertex best = graph_.order();
        for (Vertex v = 0; v < graph_.order(); ++v) {
            if (active_[v] && (best == graph_.order() || degree_[v] > degree_[best])) best = v;
        }
        return best;
    }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (Vertex v = 0; v < graph_.order(); ++v) {
            if (active_[v] && degree_[v] > best) best = degree_[v];
        }
        return best;
    }

    // ceil(2e / n) of the active subgraph; 0 when it is empty.
    std::size_t ceil_avg_degree() const {
        if (active_count_ == 0) return 0;
        return (2 * edges_ + active_count_ - 1) / active_count_;
    }

    VertexSet active_vertices() const {
        VertexSet out;
        out.reserve(active_count_);
        for (Vertex v = 0; v < graph_.order(); ++v) {
            if (active_[v]) out.push_back(v);
        }
        return out;
    }

private:
    const Graph& graph_;
    std::vector<bool> active_;
    std::vector<std::size_t> degree_;
    std::size_t active_count_ = 0;
    std::size_t edges_ = 0;
};

}  // namespace kindep::detail
