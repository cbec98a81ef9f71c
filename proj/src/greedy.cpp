#include <map>

#include "kindep/algorithms.hpp"
#include "kindep/bounds.hpp"
#include "working_graph.hpp"

namespace kindep {

namespace {

// s(B) = sum over active x of f_k(deg_B(x)).
Rational greedy_potential(const detail::WorkingGraph& w, std::size_t n, std::size_t k) {
    std::map<std::size_t, std::int64_t> histogram;
    for (Vertex v = 0; v < n; ++v) {
        if (w.active(v)) ++histogram[w.degree(v)];
    }
    Rational total;
    for (const auto& [deg, count] : histogram) {
        total += Rational(count) * potential_f(k, Rational(static_cast<std::int64_t>(deg)));
    }
    return total;
}

}  // namespace

AlgorithmRun caro_tuza_greedy(const Graph& g, std::size_t k) {
    detail::WorkingGraph w(g);
    AlgorithmRun run;
    run.witness.k = k;
    run.guarantee = caro_tuza_sum(g, k);
    run.trace.potential_values.push_back(greedy_potential(w, g.order(), k));

    while (w.active_count() > 0 && w.max_degree() >= k + 1) {
        const Vertex v = w.max_degree_vertex();
        run.trace.steps.emplace_back(Deletion{v, w.degree(v)});
        w.remove(v);
        Rational s = greedy_potential(w, g.order(), k);
        if (s < run.trace.potential_values.back()) run.potential_monotone = false;
        run.trace.potential_values.push_back(std::move(s));
    }

    run.witness.vertices = w.active_vertices();
    run.witness.bound = run.guarantee;
    run.k_independent = verify_k_independent(g, run.witness.vertices, k);
    run.guarantee_met = Rational(static_cast<std::int64_t>(run.witness.size())) >= run.guarantee;
    return run;
}

}  // namespace kindep
