#include "kindep/algorithms.hpp"
#include "kindep/bounds.hpp"
#include "working_graph.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace kindep {

namespace {

// Runs lovasz_equal on the active subgraph and stores its largest class,
// with trace entries translated back to the input graph's indices.
void finish_with_partition(const Graph& g, const detail::WorkingGraph& w, std::size_t k, AlgorithmRun& run) {
    const Subgraph sub = induced_subgraph(g, w.active_vertices());
    LovaszResult lovasz = lovasz_equal(sub.graph, k);
    for (auto& step : lovasz.trace.steps) {
        if (auto* move = std::get_if<Move>(&step)) move->vertex = sub.to_original[move->vertex];
        run.trace.steps.push_back(std::move(step));
    }
    run.trace.potential_values = std::move(lovasz.trace.potential_values);
    const auto& classes = lovasz.partition.classes;
    run.witness.vertices = sub.lift(classes[lovasz.partition.largest_class()]);
}

void delete_max(detail::WorkingGraph& w, AlgorithmRun& run) {
    const Vertex v = w.max_degree_vertex();
    run.trace.steps.emplace_back(Deletion{v, w.degree(v)});
    w.remove(v);
}

void certify(const Graph& g, AlgorithmRun& run) {
    run.k_independent = verify_k_independent(g, run.witness.vertices, run.witness.k);
    if (g.order() == 0) {
        run.guarantee_met = true;
        return;
    }
    const Rational size(static_cast<std::int64_t>(run.witness.size()));
    run.guarantee_met = run.strict ? size > run.guarantee : size >= run.guarantee;
}

}  // namespace

AlgorithmRun algorithm1(const Graph& g, std::size_t k) {
    detail::WorkingGraph w(g);
    AlgorithmRun run;
    run.witness.k = k;
    run.strict = true;
    if (g.order() > 0) {
        run.guarantee = thm_first_approach_bound(g, k);
        run.witness.bound = run.guarantee;
    }

    while (w.active_count() > 0) {
        if (w.max_degree() <= w.ceil_avg_degree() + k) {
            finish_with_partition(g, w, k, run);
            break;
        }
        delete_max(w, run);
    }
    certify(g, run);
    return run;
}

std::size_t residue_phase_t(std::size_t k, std::size_t d) {
    // t in [0, k] with d = k+1-t (mod k+1). With no edges left the residue
    // class t = k+1 applies and the partition fires directly.
    if (d == 0) return k + 1;
    return (k + 1 - d % (k + 1)) % (k + 1);
}

AlgorithmRun algorithm2_direct(const Graph& g, std::size_t k) {
    detail::WorkingGraph w(g);
    AlgorithmRun run;
    run.witness.k = k;
    if (g.order() > 0) {
        run.guarantee = main_bound(g, k);
        run.witness.bound = run.guarantee;
    }

    while (w.active_count() > 0) {
        ++run.restarts;
        const std::size_t n = w.active_count();
        const std::size_t d = w.ceil_avg_degree();
        const std::size_t t = residue_phase_t(k, d);
        const std::size_t q = (n + d + 2 * t) / (d + 2 * t + 1);
        run.trace.steps.emplace_back(Restart{d, t, q});

        bool done = false;
        for (std::size_t deleted = 0;; ++deleted) {
            if (w.max_degree() + 1 <= d + t) {
                finish_with_partition(g, w, k, run);
                done = true;
                break;
            }
            if (deleted == q) break;
            delete_max(w, run);
        }
        if (done) break;
    }
    certify(g, run);
    return run;
}

namespace {

// A batch of identical copies of one induced subgraph of the input.
struct CopyGroup {
    detail::WorkingGraph graph;
    BigInt copies;
};

}  // namespace

AlgorithmRun algorithm2(const Graph& g, std::size_t k) {
    AlgorithmRun run;
    run.witness.k = k;
    if (g.order() == 0) {
        certify(g, run);
        return run;
    }
    run.guarantee = main_bound(g, k);
    run.witness.bound = run.guarantee;

    std::vector<CopyGroup> groups;
    groups.push_back({detail::WorkingGraph(g), BigInt(1)});
    auto union_max_degree = [&] {
        std::size_t best = 0;
        for (const auto& grp : groups) best = std::max(best, grp.graph.max_degree());
        return best;
    };

    for (;;) {
        ++run.restarts;
        BigInt n = 0;
        BigInt twice_edges = 0;
        for (const auto& grp : groups) {
            n += grp.copies * grp.graph.active_count();
            twice_edges += grp.copies * 2 * grp.graph.edge_count();
        }
        if (n == 0) break;
        const auto d = static_cast<std::size_t>(Rational(twice_edges, n).ceil_int());
        const std::size_t t = residue_phase_t(k, d);
        const std::size_t modulus = d + 2 * t + 1;

        // Replicate until the modulus divides the vertex count, so the
        // phase removes exactly n / (d+2t+1) vertices.
        const auto residue = static_cast<std::size_t>(n % modulus);
        const std::size_t factor = modulus / std::gcd(residue == 0 ? modulus : residue, modulus);
        if (factor > 1) {
            for (auto& grp : groups) grp.copies *= factor;
            n *= factor;
        }
        const BigInt q = n / modulus;
        run.trace.steps.emplace_back(Restart{d, t, q, factor});

        BigInt deleted = 0;
        bool done = false;
        for (;;) {
            const std::size_t delta = union_max_degree();
            if (delta + 1 <= d + t) {
                done = true;
                break;
            }
            if (deleted == q) break;
            std::size_t index = 0;
            while (groups[index].graph.max_degree() != delta) ++index;
            // A maximum-degree vertex stays maximum in every untouched copy,
            // so it is removed from as many copies as the budget allows.
            const BigInt take = std::min(groups[index].copies, BigInt(q - deleted));
            if (take < groups[index].copies) {
                CopyGroup rest{groups[index].graph, groups[index].copies - take};
                groups[index].copies = take;
                groups.push_back(std::move(rest));
            }
            CopyGroup& grp = groups[index];
            const Vertex v = grp.graph.max_degree_vertex();
            run.trace.steps.emplace_back(Deletion{v, grp.graph.degree(v), index, take});
            grp.graph.remove(v);
            deleted += take;
        }
        if (done) break;
    }

    // The largest class over all groups is at least the average over copies.
    AlgorithmRun best;
    bool have = false;
    for (const auto& grp : groups) {
        if (grp.graph.active_count() == 0) continue;
        AlgorithmRun candidate;
        finish_with_partition(g, grp.graph, k, candidate);
        if (!have || candidate.witness.size() > best.witness.size()) {
            best = std::move(candidate);
            have = true;
        }
    }
    if (have) {
        run.witness.vertices = std::move(best.witness.vertices);
        for (auto& step : best.trace.steps) run.trace.steps.push_back(std::move(step));
        run.trace.potential_values = std::move(best.trace.potential_values);
    }
    certify(g, run);
    return run;
}

}  // namespace kindep
