#include "kindep/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace kindep {

namespace {

std::vector<Vertex> iota_vertices(std::size_t n) {
    std::vector<Vertex> out(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

std::uint64_t uniform_at_most(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == std::numeric_limits<std::uint64_t>::max()) return rng();
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % range);
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % range;
}

}  // namespace

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

Graph j_graph(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw GraphError("j_graph needs an even n >= 2, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

Graph complete_minus_clique(std::size_t n, std::size_t q) {
    if (q > n) {
        throw GraphError("complete_minus_clique needs q <= n (n=" + std::to_string(n) + ", q=" + std::to_string(q) +
                         ")");
    }
    return remove_edges_of(complete(n), complete(q), iota_vertices(q));
}

Graph complete_minus_cycle(std::size_t n) {
    if (n < 3) {
        throw GraphError("complete_minus_cycle needs n >= 3, got " + std::to_string(n));
    }
    std::vector<Edge> cycle;
    for (Vertex i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    return remove_edges_of(complete(n), Graph::build(n, cycle), iota_vertices(n));
}

Graph star(std::size_t m) {
    std::vector<Edge> edges;
    for (Vertex leaf = 1; leaf <= m; ++leaf) edges.emplace_back(0, leaf);
    return Graph::build(m + 1, edges);
}

Graph wagner_r8() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
    for (Vertex i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
    return Graph::build(8, edges);
}

Graph thm14_5(std::size_t d, std::size_t q) {
    if (d < 2) {
        throw GraphError("thm14_5 needs d >= 2, got " + std::to_string(d));
    }
    if (d > 4 + 6 * q) {
        throw GraphError("thm14_5 needs d <= 4+6q (d=" + std::to_string(d) + ", q=" + std::to_string(q) + ")");
    }
    return disjoint_union(complete_minus_clique(d + 2, 3), copies(q, complete_minus_clique(d + 1, 3)));
}

Graph thm14_6(std::size_t k) {
    if (k < 2) {
        throw GraphError("thm14_6 needs k >= 2, got " + std::to_string(k));
    }
    return disjoint_union(complete_minus_clique(k + 3, k + 1), copies(k, star(k + 1)));
}

Graph thm12_2(std::size_t k) { return disjoint_union(star(k + 1), Graph(k)); }

Graph thm10_odd(std::size_t d) {
    if (d % 2 == 0) {
        throw GraphError("thm10_odd needs an odd d, got " + std::to_string(d));
    }
    return disjoint_union(copies(d + 3, j_graph(d + 1)), copies(d + 1, j_graph(d + 3)));
}

Graph blend(const Graph& g1, const Graph& g2) {
    if (g1.order() == 0 || g2.order() == 0) {
        throw GraphError("blend needs two nonempty graphs");
    }
    return disjoint_union(copies(g2.order(), g1), copies(g1.order(), g2));
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (m > pairs) {
        throw GraphError("random_gnm: m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(pairs));
    }
    std::mt19937_64 rng(seed);
    // Floyd: for j = N-m .. N-1 draw t in [0, j]; take t unless already
    // taken, in which case take j.
    std::unordered_set<std::uint64_t> chosen;
    std::vector<std::uint64_t> picks;
    picks.reserve(m);
    for (std::uint64_t j = pairs - m; j < pairs; ++j) {
        std::uint64_t t = uniform_at_most(rng, j);
        std::uint64_t pick = chosen.insert(t).second ? t : j;
        if (pick == j) chosen.insert(j);
        picks.push_back(pick);
    }
    // Row offsets: pairs (u, v) with u < v start at offset[u].
    std::vector<std::uint64_t> offset(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) offset[u + 1] = offset[u] + (n - 1 - u);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t idx : picks) {
        auto it = std::upper_bound(offset.begin(), offset.end(), idx);
        Vertex u = static_cast<Vertex>(std::distance(offset.begin(), it) - 1);
        Vertex v = u + 1 + static_cast<Vertex>(idx - offset[u]);
        edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

}  // namespace kindep
