#pragma once

// Constructive procedures for large k-independent sets.
//
// Every procedure is deterministic: ties in "vertex of maximum degree" go
// to the smallest index, and ties between target classes go to the
// smallest class index.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "kindep/graph.hpp"
#include "kindep/oracle.hpp"
#include "kindep/rational.hpp"
#include "kindep/trace.hpp"

namespace kindep {

class AlgorithmError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Partition {
    std::vector<VertexSet> classes;
    std::vector<std::size_t> capacities;

    // Index of the largest class (smallest index on ties).
    std::size_t largest_class() const;
};

struct LovaszResult {
    Partition partition;
    RunTrace trace;
};

// Local search for a partition into classes with Delta(G[V_i]) <= k_i.
//
// Requires sum(k_i + 1) >= Delta(G) + 1 (AlgorithmError otherwise). Starts
// from vertex v in class v mod t. While some vertex v of class i has
// deg_{V_i}(v) >= k_i + 1 (smallest such v first), v moves to the class j
// minimizing deg_{V_j}(v) / (k_j + 1). The potential
//   Phi = sum_i e(G[V_i]) / (k_i + 1)
// drops strictly with every move, so the loop terminates.
LovaszResult lovasz_partition(const Graph& g, std::span<const std::size_t> capacities);

// lovasz_partition with ceil((Delta+1)/(k+1)) classes of capacity k.
LovaszResult lovasz_equal(const Graph& g, std::size_t k);

struct AlgorithmRun {
    WitnessSet witness;  // indices of the input graph
    RunTrace trace;
    // The certified bound: |S| >= guarantee, or |S| > guarantee when strict.
    Rational guarantee;
    bool strict = false;
    bool k_independent = false;
    bool guarantee_met = false;
    // caro_tuza_greedy: s(B) never decreased. Others: always true.
    bool potential_monotone = true;
    // algorithm2: number of outer-loop passes.
    std::size_t restarts = 0;

    bool ok() const { return k_independent && guarantee_met && potential_monotone; }
};

// Repeatedly deletes a maximum-degree vertex of G[B] while Delta(G[B]) > k.
// The trace records s(B) = sum_{x in B} f_k(deg_B(x)) after each deletion;
// it never decreases, so |B| >= caro_tuza_sum(G, k).
AlgorithmRun caro_tuza_greedy(const Graph& g, std::size_t k);

// Deletes maximum-degree vertices until Delta <= ceil(d) + k, then returns
// the largest class of lovasz_equal. |S| > (k+1) n / (d(G) + 2k + 2).
AlgorithmRun algorithm1(const Graph& g, std::size_t k);

// Phase-wise deletion with partition fallback. Each phase fixes
// d = ceil(d(G_cur)), t in [0, k] with d = k+1-t (mod k+1) and
// q = n_cur / (d+2t+1); it partitions as soon as Delta <= d+t-1 and
// otherwise restarts after q deletions, by which point ceil(d) has dropped.
// An edgeless current graph (d = 0) is partitioned at once.
//
// The working graph is a disjoint union of copies of induced subgraphs of
// G, kept as groups with multiplicities. Before each phase every
// multiplicity is scaled so that d+2t+1 divides the vertex count; the
// result is the largest partition class found in any group, so
// |S| >= ceil((k+1) n / (ceil(d(G)) + k + 1)).
AlgorithmRun algorithm2(const Graph& g, std::size_t k);

// The same phases run on G itself, with q = ceil(n_cur / (d+2t+1)) and no
// replication. The main bound is checked but not guaranteed: rounding in
// q can leave the output one short of it.
AlgorithmRun algorithm2_direct(const Graph& g, std::size_t k);

}  // namespace kindep
