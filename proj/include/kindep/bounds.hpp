#pragma once

// Closed-form bounds on the k-independence number alpha_k(G) and on
//   f(k, d) = inf { alpha_k(G) / n(G) : d(G) <= d },
// all evaluated in exact rational arithmetic.

#include <cstddef>
#include <optional>

#include "kindep/graph.hpp"
#include "kindep/rational.hpp"

namespace kindep {

// f_k(x) = 1 - x / (2(k+1))      for 0 <= x <= k+1
//        = (k+2) / (2(x+1))      for x >= k+1.
// Convex and strictly decreasing; f_k(0) = 1, f_k(k+1) = 1/2.
// Throws std::domain_error for x < 0.
Rational potential_f(std::size_t k, const Rational& x);

// Sum of f_k(deg v) over all vertices; a lower bound on alpha_k(G).
// For k = 0 this is the Caro-Wei bound.
Rational caro_tuza_sum(const Graph& g, std::size_t k);

// f_k(d(G)) * n. For k = 0 this is the Turan bound n / (d+1).
Rational corollary_avg(const Graph& g, std::size_t k);

// (k+2) n / (2(d(G)+1)); only a bound when d(G) >= k+1, std::nullopt
// otherwise.
std::optional<Rational> corollary_halfbound(const Graph& g, std::size_t k);

// n / ceil((Delta+1)/(k+1)).
//
// Writing ceil((Delta+1)/(k+1)) = (Delta+1+r)/(k+1) with 0 <= r <= k and
// Delta+1+r = 0 mod (k+1) gives the equivalent form (k+1) n / (Delta+r+1).
Rational hopkins_staton(const Graph& g, std::size_t k);

// (k+1) n / (d(G) + 2k + 2). alpha_k(G) exceeds this strictly.
Rational thm_first_approach_bound(const Graph& g, std::size_t k);

// (k+1) n / (ceil(d(G)) + k + 1).
Rational main_bound(const Graph& g, std::size_t k);

struct ResidueT {
    std::size_t t;  // in [1, k+1]
};

// The unique t in [1, k+1] with d = k+1-t (mod k+1).
ResidueT residue_t(std::size_t k, std::size_t d);

// (k+1)(d+2t) / ((d+k+t+1)(d+t)) with t = residue_t(k, d).
Rational f_lower(std::size_t k, std::size_t d);

// (2k+2-d) / (2k+2); the k >= d specialization of f_lower.
// Throws std::domain_error if d > k.
Rational f_lower_small_degree(std::size_t k, std::size_t d);

// f(1, d) = 2/(d+2) for even d, 2(d+2)/((d+1)(d+3)) for odd d.
Rational f1_exact(std::size_t d);

// h(r) = ((r-1)^(r+3) - 1) / (r-2), r >= 3.
BigInt h_function(std::size_t r);

// alpha_q(G) <= ceil((q+1)/(p+1)) alpha_p(G) using exact oracle values.
// Requires p <= q; throws OracleLimitError above the oracle's vertex cap.
bool theorem6_check(const Graph& g, std::size_t p, std::size_t q, std::size_t limit = 40);

}  // namespace kindep
