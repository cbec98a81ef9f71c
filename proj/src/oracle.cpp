#include "kindep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kindep/algorithms.hpp"

namespace kindep {

OracleLimitError::OracleLimitError(std::size_t n, std::size_t limit)
    : std::runtime_error("graph has " + std::to_string(n) + " vertices, above the oracle limit of " +
                         std::to_string(limit)),
      limit_(limit) {}

namespace {

class Bits {
public:
    explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count_and(const Bits& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// Branch and bound for one connected component, on local indices 0..m-1.
//
// A node is a candidate set C with a forced subset F (vertices committed to
// the solution). The answer below the node is the largest k-independent
// S with F <= S <= C. Bound: |C| minus the largest number of neighbours
// some forced vertex still has to shed.
class AlphaSearch {
public:
    AlphaSearch(const Graph& g, std::size_t k) : m_(g.order()), k_(k), adj_(m_, Bits(m_)), best_set_(m_) {
        for (Vertex v = 0; v < m_; ++v) {
            for (Vertex w : g.neighbors(v)) adj_[v].set(w);
        }
        AlgorithmRun seed = caro_tuza_greedy(g, k);
        best_ = seed.witness.size();
        for (Vertex v : seed.witness.vertices) best_set_.set(v);
    }

    VertexSet solve() {
        Bits all(m_);
        for (std::size_t v = 0; v < m_; ++v) all.set(v);
        Bits forced(m_);
        search(all, forced);
        VertexSet out;
        best_set_.for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

private:
    void search(Bits& cand, Bits& forced) {
        const std::size_t size = cand.count();
        if (size <= best_) return;

        std::size_t pick = m_;
        std::size_t pick_degree = 0;
        std::size_t upper = size;
        bool infeasible = false;
        cand.for_each([&](std::size_t v) {
            if (infeasible) return;
            const std::size_t deg = adj_[v].count_and(cand);
            if (pick == m_ || deg > pick_degree) {
                pick = v;
                pick_degree = deg;
            }
            if (deg > k_ && forced.test(v)) {
                const std::size_t excess = deg - k_;
                const std::size_t free_neighbours = deg - adj_[v].count_and(forced);
                if (free_neighbours < excess) {
                    infeasible = true;
                    return;
                }
                upper = std::min(upper, size - excess);
            }
        });
        if (infeasible) return;
        if (pick_degree <= k_) {
            best_ = size;
            best_set_ = cand;
            return;
        }
        if (upper <= best_) return;

        std::size_t branch = pick;
        if (forced.test(pick)) {
            // Some unforced neighbour of the forced vertex has to go or stay.
            branch = m_;
            std::size_t branch_degree = 0;
            adj_[pick].for_each([&](std::size_t u) {
                if (!cand.test(u) || forced.test(u)) return;
                const std::size_t deg = adj_[u].count_and(cand);
                if (branch == m_ || deg > branch_degree) {
                    branch = u;
                    branch_degree = deg;
                }
            });
        }

        cand.reset(branch);
        search(cand, forced);
        cand.set(branch);

        forced.set(branch);
        search(cand, forced);
        forced.reset(branch);
    }

    std::size_t m_;
    std::size_t k_;
    std::vector<Bits> adj_;
    std::size_t best_ = 0;
    Bits best_set_;
};

ExactAlpha solve_components(const Graph& g, std::size_t k, std::size_t component_limit) {
    ExactAlpha out{0, WitnessSet{}};
    out.witness.k = k;
    for (const VertexSet& comp : connected_components(g)) {
        if (comp.size() > component_limit) throw OracleLimitError(comp.size(), component_limit);
        const Subgraph sub = induced_subgraph(g, comp);
        AlphaSearch search(sub.graph, k);
        VertexSet local = search.solve();
        for (Vertex v : local) out.witness.vertices.push_back(sub.to_original[v]);
    }
    std::sort(out.witness.vertices.begin(), out.witness.vertices.end());
    out.alpha = out.witness.size();
    return out;
}

}  // namespace

ExactAlpha alpha_k_exact(const Graph& g, std::size_t k, std::size_t limit) {
    if (g.order() > limit) throw OracleLimitError(g.order(), limit);
    return solve_components(g, k, limit);
}

ExactAlpha alpha_k_by_components(const Graph& g, std::size_t k, std::size_t limit) {
    return solve_components(g, k, limit);
}

ExactAlpha alpha_k_enumerate(const Graph& g, std::size_t k, std::size_t limit) {
    const std::size_t n = g.order();
    if (n > limit || n > 62) throw OracleLimitError(n, std::min<std::size_t>(limit, 62));
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
    }
    std::uint64_t best_mask = 0;
    int best = 0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (std::uint64_t rest = mask; rest != 0 && ok; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            ok = static_cast<std::size_t>(std::popcount(adj[v] & mask)) <= k;
        }
        if (ok) {
            best = size;
            best_mask = mask;
        }
    }
    ExactAlpha out{static_cast<std::size_t>(best), WitnessSet{}};
    out.witness.k = k;
    for (Vertex v = 0; v < n; ++v) {
        if ((best_mask >> v) & 1U) out.witness.vertices.push_back(v);
    }
    return out;
}

namespace {

class ChiSearch {
public:
    ChiSearch(const Graph& g, std::size_t k) : g_(g), k_(k), cls_(g.order(), none), inside_(g.order(), 0) {
        order_.resize(g.order());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool feasible(std::size_t classes) {
        classes_ = classes;
        return assign(0, 0);
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    bool assign(std::size_t index, std::size_t used) {
        if (index == order_.size()) return true;
        const Vertex v = order_[index];
        // Classes are interchangeable: a vertex may open at most one new class.
        const std::size_t last = std::min(used + 1, classes_);
        for (std::size_t c = 0; c < last; ++c) {
            std::size_t same = 0;
            bool ok = true;
            for (Vertex w : g_.neighbors(v)) {
                if (cls_[w] == c) {
                    if (++same > k_ || inside_[w] + 1 > k_) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            cls_[v] = c;
            inside_[v] = same;
            for (Vertex w : g_.neighbors(v)) {
                if (cls_[w] == c && w != v) ++inside_[w];
            }
            if (assign(index + 1, std::max(used, c + 1))) return true;
            for (Vertex w : g_.neighbors(v)) {
                if (cls_[w] == c && w != v) --inside_[w];
            }
            cls_[v] = none;
            inside_[v] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t classes_ = 0;
    std::vector<Vertex> order_;
    std::vector<std::size_t> cls_;
    std::vector<std::size_t> inside_;
};

}  // namespace

std::size_t chi_k_exact(const Graph& g, std::size_t k, std::size_t limit) {
    if (g.order() > limit) throw OracleLimitError(g.order(), limit);
    if (g.order() == 0) return 0;
    const std::size_t upper = (g.max_degree() + 1 + k) / (k + 1);
    for (std::size_t t = 1; t <= upper; ++t) {
        ChiSearch search(g, k);
        if (search.feasible(t)) return t;
    }
    throw std::logic_error("chi_k_exact: no partition into ceil((Delta+1)/(k+1)) classes found");
}

}  // namespace kindep
