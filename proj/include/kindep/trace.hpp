#pragma once

// Step-by-step record of an algorithm run, for golden-file tests and the
// CLI's --trace output.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kindep/graph.hpp"
#include "kindep/rational.hpp"

namespace kindep {

struct Deletion {
    Vertex vertex;
    std::size_t degree;  // degree in the current subgraph just before removal
    // Replicated runs: the copy group the vertex was removed from and the
    // number of copies it was removed from at once.
    std::size_t group = 0;
    BigInt copies = 1;
};

struct Move {
    Vertex vertex;
    std::size_t from;
    std::size_t to;
    Rational phi;  // partition potential after the move
};

struct Restart {
    std::size_t d;
    std::size_t t;
    BigInt q;                // deletion budget of the phase
    std::size_t copies = 1;  // factor the working graph was replicated by
};

struct PartitionStep {
    std::size_t classes;
};

using TraceStep = std::variant<Deletion, Move, Restart, PartitionStep>;

struct RunTrace {
    std::vector<TraceStep> steps;
    // Greedy runs: s(B) before and after every deletion.
    // Partition runs: the potential before and after every move.
    std::vector<Rational> potential_values;

    // One line per step:
    //   DEL v deg=D [group=G copies=C]
    //   MOVE v i->j phi=p/q
    //   RESTART d=D t=T q=Q [copies=C]
    //   PARTITION t=T
    std::vector<std::string> lines() const;
    std::string to_log() const;

    std::size_t count_deletions() const;
    std::size_t count_moves() const;
};

std::string format_step(const TraceStep& step);

}  // namespace kindep
