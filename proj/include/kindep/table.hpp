#pragma once

// Witness ratios alpha_k(G)/n(G) as certified upper bounds on f(k, d), and
// the f(2, d) table for d = 0..10.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kindep/family_spec.hpp"
#include "kindep/graph.hpp"
#include "kindep/oracle.hpp"
#include "kindep/rational.hpp"

namespace kindep {

struct WitnessRatio {
    Rational ratio;
    std::size_t alpha = 0;
    std::size_t n = 0;
    std::size_t max_degree = 0;  // so the ratio also bounds f(k, d, Delta)
    Rational avg_degree;
    bool oracle_verified = false;
};

// alpha_k(G)/n(G) for a graph with d(G) <= d. The oracle runs per component
// when every component fits under `limit`; a supplied alpha must then agree
// with it. Without an oracle value, `alpha` is taken as given.
// Throws std::invalid_argument if d(G) > d, if n = 0, if the supplied alpha
// contradicts the oracle, or if neither alpha nor the oracle is available.
WitnessRatio witness_ratio(const Graph& g, std::size_t k, std::size_t d,
                           std::optional<std::size_t> alpha = std::nullopt,
                           std::size_t limit = default_alpha_limit);

// Complement of an r-regular graph H of girth >= k+4: alpha_k = k+2, with
// d = n-1-r. Throws std::invalid_argument if H is not regular or its girth
// is too small.
WitnessRatio high_girth_complement_witness(const Graph& h, std::size_t k,
                                           std::size_t limit = default_alpha_limit);

struct TableRow {
    std::size_t d = 0;
    Rational lower;
    Rational upper;
    GraphSpec witness;
    std::size_t witness_alpha = 0;
    std::size_t witness_n = 0;
    Rational reference_lower;  // fractions as printed in the reference table
    Rational reference_upper;
    std::optional<std::string> discrepancy;
};

// Rows d = 0..10 for k = 2, recomputed from f_lower and oracle-verified
// witnesses; disagreements with the reference fractions land in
// `discrepancy`.
std::vector<TableRow> table_f2(std::size_t limit = default_alpha_limit);

std::string table_to_text(const std::vector<TableRow>& rows);
nlohmann::ordered_json table_to_json(const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace kindep
