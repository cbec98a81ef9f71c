#pragma once

// Text descriptions of generated graphs, as accepted by the CLI.
//
//   spec  := term ('+' term)*          disjoint union, left to right
//   term  := [count '*'] atom          count copies of atom
//   atom  := name [':' args]
//   args  := arg (',' arg)*            arg is "value" or "key=value"
//   blend := "blend:" atom '/' atom
//
// Examples: "j:6", "thm14_5:d=3,q=0", "gnm:n=30,m=60,seed=7",
// "r8+4*star:3", "blend:complete:1/complete:3".

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family {
    complete,
    j_n,
    complete_minus_clique,
    complete_minus_cycle,
    star,
    wagner_r8,
    thm14_5,
    thm14_6,
    thm12_2,
    thm10_odd,
    blend,
    random_gnm,
};

struct FamilySpec {
    Family family = Family::complete;
    // Integer parameters in the family's canonical order (see param_names).
    std::vector<std::uint64_t> parameters;
    // random_gnm only.
    std::optional<std::uint64_t> seed;
    // blend only: the two operand graphs.
    std::vector<FamilySpec> operands;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct GraphSpec {
    struct Term {
        std::uint64_t count = 1;
        FamilySpec atom;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

const char* family_name(Family family);
// Parameter names in canonical order, e.g. {"d", "q"} for thm14_5.
std::vector<std::string> param_names(Family family);

FamilySpec parse_family_spec(const std::string& text);
GraphSpec parse_graph_spec(const std::string& text);

// Canonical text; parse(to_string(s)) == s.
std::string to_string(const FamilySpec& spec);
std::string to_string(const GraphSpec& spec);

Graph instantiate(const FamilySpec& spec);
Graph instantiate(const GraphSpec& spec);

// Replaces the seed of every random_gnm atom with `seed`.
GraphSpec with_seed(GraphSpec spec, std::uint64_t seed);
// The seed of the first random_gnm atom, if any.
std::optional<std::uint64_t> first_seed(const GraphSpec& spec);

}  // namespace kindep
