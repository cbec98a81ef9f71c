#pragma once

// Seeded random graphs shared by the unit and acceptance tests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kindep/generators.hpp"
#include "kindep/graph.hpp"

namespace kindep::testing {

struct CorpusGraph {
    std::string name;
    Graph graph;
};

// 500 graphs with 1 <= n <= 40 and m <= n^2/4, so d(G) ranges over [0, n/2].
inline std::vector<CorpusGraph> main_corpus(std::size_t count = 500) {
    std::vector<CorpusGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + (i * 37) % 40;
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t cap = std::min(pairs, n * n / 4);
        const std::size_t m = (i * 7919 + i / 40) % (cap + 1);
        const std::uint64_t seed = 1000 + i;
        out.push_back({"gnm:n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",seed=" + std::to_string(seed),
                       random_gnm(n, m, seed)});
    }
    return out;
}

// Graphs with 1 <= n <= max_n and any edge count, for the exact oracle.
inline std::vector<CorpusGraph> small_corpus(std::size_t count = 200, std::size_t max_n = 12) {
    std::vector<CorpusGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + i % max_n;
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t m = (i * 131 + i / max_n) % (pairs + 1);
        const std::uint64_t seed = 50000 + i;
        out.push_back({"gnm:n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",seed=" + std::to_string(seed),
                       random_gnm(n, m, seed)});
    }
    return out;
}

}  // namespace kindep::testing
