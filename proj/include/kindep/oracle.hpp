#pragma once

// Exact alpha_k and chi_k for small graphs.
//
// alpha_k_exact is a branch-and-bound over (candidate set, forced set)
// pairs; alpha_k_enumerate is an independent brute force over all 2^n
// subsets used to cross-check it.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "kindep/graph.hpp"
#include "kindep/rational.hpp"

namespace kindep {

// A vertex subset claimed to be k-independent, optionally with the bound
// it is supposed to meet.
struct WitnessSet {
    VertexSet vertices;  // sorted, indices of the certified graph
    std::size_t k = 0;
    std::optional<Rational> bound;

    std::size_t size() const { return vertices.size(); }
};

class OracleLimitError : public std::runtime_error {
public:
    OracleLimitError(std::size_t n, std::size_t limit);
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

inline constexpr std::size_t default_alpha_limit = 40;
inline constexpr std::size_t default_chi_limit = 20;
inline constexpr std::size_t default_enumeration_limit = 24;

struct ExactAlpha {
    std::size_t alpha;
    WitnessSet witness;
};

// Throws OracleLimitError when n(G) > limit.
ExactAlpha alpha_k_exact(const Graph& g, std::size_t k, std::size_t limit = default_alpha_limit);

// alpha_k as the sum over connected components; `limit` caps each
// component rather than the whole graph.
ExactAlpha alpha_k_by_components(const Graph& g, std::size_t k, std::size_t limit = default_alpha_limit);

// Maximum over all 2^n subsets. Throws OracleLimitError when n > limit.
ExactAlpha alpha_k_enumerate(const Graph& g, std::size_t k, std::size_t limit = default_enumeration_limit);

// Smallest number of classes in a partition of V(G) whose classes induce
// maximum degree <= k. chi_k of the graph with no vertices is 0.
std::size_t chi_k_exact(const Graph& g, std::size_t k, std::size_t limit = default_chi_limit);

}  // namespace kindep
