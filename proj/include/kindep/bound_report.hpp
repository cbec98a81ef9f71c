#pragma once

// Tabulated bounds for one query, with text / JSON / CSV renderings.
// Fractions are always rendered as "p/q" strings in machine-readable form.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kindep/graph.hpp"
#include "kindep/rational.hpp"

namespace kindep {

enum class BoundKind { lower, upper };

struct BoundRow {
    std::string name;
    BoundKind kind = BoundKind::lower;
    // std::nullopt when the bound has no numeric value (existential constant).
    std::optional<Rational> value;
    bool applicable = true;
    std::string note;
    // Lower bounds on alpha_k: the smallest integer alpha_k is guaranteed to
    // reach (ceil, or floor+1 for strict bounds).
    std::optional<BigInt> integer_bound;
};

struct GraphInputs {
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t max_degree = 0;
    Rational avg_degree;
};

struct BoundReport {
    std::optional<GraphInputs> graph;  // bounds on alpha_k(G)
    std::size_t k = 0;
    std::optional<std::size_t> d;      // bounds on f(k, d)
    std::vector<BoundRow> rows;

    const BoundRow* find(const std::string& name) const;
};

// Lower bounds on alpha_k(G) plus the trivial upper bound n. Requires n >= 1.
BoundReport graph_lower_bounds(const Graph& g, std::size_t k);

// Upper bounds on f(k, d) from explicit constructions, each with its
// applicability conditions evaluated exactly, plus f_lower(k, d) as the
// matching lower row.
//   complete_graph            d >= k                   (k+1)/(d+1)       K_{d+1}
//   complete_minus_matching   d > k, d even, k odd     (k+1)/(d+2)       J_{d+2}
//   complete_minus_cycle      d > k                    (k+2)/(d+3)       K_{d+3} - E(C_{d+3})
//   high_girth_k_regular      k >= 3, d >= 2h(k)-k-1,  (k+2)/(d+k+1)     existential
//                             d+k+1 even
//   triangle_deleted_cliques  k = 2, d >= 2; smallest q with d <= 4+6q
//                                                      3/(d+1+1/(q+1))   thm14_5(d, q)
//   stars_and_clique          k >= 2, d = 2            (k+1)/(k+2+1/(k+1)) thm14_6(k)
//   high_girth_asymptotic     k >= 3; (k+2)/(d + c (d/2)^(1/(k+2)) + 1) with an
//                             existential c > 0, so no value is reported
BoundReport f_upper_catalog(std::size_t k, std::size_t d);

std::string to_text(const BoundReport& report);
nlohmann::ordered_json to_json(const BoundReport& report);
// Header: name,kind,value,applicable,integer_bound,note
std::string to_csv(const BoundReport& report);

std::string kind_name(BoundKind kind);

}  // namespace kindep
