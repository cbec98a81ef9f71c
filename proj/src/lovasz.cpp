#include <numeric>
#include <stdexcept>
#include <string>

#include "kindep/algorithms.hpp"

namespace kindep {

std::size_t Partition::largest_class() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < classes.size(); ++i) {
        if (classes[i].size() > classes[best].size()) best = i;
    }
    return best;
}

LovaszResult lovasz_partition(const Graph& g, std::span<const std::size_t> capacities) {
    const std::size_t t = capacities.size();
    if (t == 0) {
        throw AlgorithmError("lovasz_partition: no classes given");
    }
    std::size_t slots = 0;
    for (std::size_t c : capacities) slots += c + 1;
    if (slots < g.max_degree() + 1) {
        throw AlgorithmError("lovasz_partition: sum of (k_i+1) = " + std::to_string(slots) +
                             " is below Delta+1 = " + std::to_string(g.max_degree() + 1));
    }

    const std::size_t n = g.order();
    std::vector<std::size_t> cls(n);
    for (Vertex v = 0; v < n; ++v) cls[v] = v % t;
    // within[v * t + j]: neighbours of v currently in class j.
    std::vector<std::size_t> within(n * t, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) ++within[v * t + cls[w]];
    }
    auto count = [&](Vertex v, std::size_t j) { return within[v * t + j]; };
    auto cap = [&](std::size_t j) { return static_cast<std::int64_t>(capacities[j] + 1); };

    Rational phi;
    {
        std::vector<std::size_t> twice_edges(t, 0);
        for (Vertex v = 0; v < n; ++v) twice_edges[cls[v]] += count(v, cls[v]);
        for (std::size_t j = 0; j < t; ++j) {
            phi += Rational(static_cast<std::int64_t>(twice_edges[j] / 2), cap(j));
        }
    }

    LovaszResult result;
    result.trace.steps.emplace_back(PartitionStep{t});
    result.trace.potential_values.push_back(phi);

    while (true) {
        Vertex v = n;
        for (Vertex u = 0; u < n; ++u) {
            if (count(u, cls[u]) >= capacities[cls[u]] + 1) {
                v = u;
                break;
            }
        }
        if (v == n) break;

        const std::size_t from = cls[v];
        std::size_t to = from;
        for (std::size_t j = 0; j < t; ++j) {
            // count(v,j)/cap(j) < count(v,to)/cap(to), cross-multiplied.
            if (static_cast<std::int64_t>(count(v, j)) * cap(to) < static_cast<std::int64_t>(count(v, to)) * cap(j)) {
                to = j;
            }
        }
        // sum_j count(v,j) = deg(v) <= Delta < sum_j (k_j+1), so some class
        // has count(v,j)/(k_j+1) < 1 <= count(v,from)/(k_from+1).
        if (to == from) {
            throw std::logic_error("lovasz_partition: no improving move for vertex " + std::to_string(v));
        }
        phi += Rational(static_cast<std::int64_t>(count(v, to)), cap(to)) -
               Rational(static_cast<std::int64_t>(count(v, from)), cap(from));
        for (Vertex w : g.neighbors(v)) {
            --within[w * t + from];
            ++within[w * t + to];
        }
        cls[v] = to;
        result.trace.steps.emplace_back(Move{v, from, to, phi});
        result.trace.potential_values.push_back(phi);
    }

    result.partition.capacities.assign(capacities.begin(), capacities.end());
    result.partition.classes.assign(t, {});
    for (Vertex v = 0; v < n; ++v) result.partition.classes[cls[v]].push_back(v);
    return result;
}

LovaszResult lovasz_equal(const Graph& g, std::size_t k) {
    const std::size_t classes = (g.max_degree() + 1 + k) / (k + 1);
    std::vector<std::size_t> capacities(classes, k);
    return lovasz_partition(g, capacities);
}

}  // namespace kindep
