#pragma once

// Named graph families. Vertex layouts are fixed so that outputs are
// reproducible:
//   - complete_minus_clique(n, q): the removed clique is on vertices 0..q-1.
//   - complete_minus_cycle(n): the removed cycle is 0-1-...-(n-1)-0.
//   - j_graph(n): the removed perfect matching pairs 2i with 2i+1.
//   - star(m): center 0, leaves 1..m.
//   - unions place components left to right in the order they are written.

#include <cstddef>
#include <cstdint>

#include "kindep/graph.hpp"

namespace kindep {

Graph complete(std::size_t n);
// K_n minus a perfect matching; n even, n >= 2.
Graph j_graph(std::size_t n);
Graph complete_minus_clique(std::size_t n, std::size_t q);
// K_n minus a Hamiltonian cycle; n >= 3.
Graph complete_minus_cycle(std::size_t n);
// K_{1,m}.
Graph star(std::size_t m);
// 8-cycle plus the four long diagonals (i ~ i+1, i ~ i+4 mod 8).
Graph wagner_r8();

// (K_{d+2} - E(K_3)) ∪ q(K_{d+1} - E(K_3)); requires 2 <= d <= 4 + 6q,
// which keeps the average degree at most d.
Graph thm14_5(std::size_t d, std::size_t q);
// (K_{k+3} - E(K_{k+1})) ∪ k K_{1,k+1}; k >= 2. Average degree exactly 2
// and alpha_k = (k+1)^2.
Graph thm14_6(std::size_t k);
// K_{1,k+1} ∪ k K_1: average degree 1 and alpha_k = 2k+1.
Graph thm12_2(std::size_t k);
// (d+3) J_{d+1} ∪ (d+1) J_{d+3} for odd d >= 1.
Graph thm10_odd(std::size_t d);

// n(G2) copies of G1 followed by n(G1) copies of G2. The average degree is
// the mean of the two inputs' average degrees.
Graph blend(const Graph& g1, const Graph& g2);

// Uniform simple graph with exactly m edges.
//
// The generator is std::mt19937_64 seeded with `seed` (its output sequence
// is fixed by the C++ standard). Integers in [0, b] are drawn by rejection
// sampling on raw 64-bit outputs, and m distinct pair indices out of the
// n(n-1)/2 pairs are chosen with Floyd's algorithm. Pair index i maps to the
// i-th pair (u, v), u < v, in lexicographic order. The result is therefore
// bit-identical across platforms.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace kindep
