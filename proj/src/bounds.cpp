#include "kindep/bounds.hpp"

#include <map>

#include "kindep/oracle.hpp"

namespace kindep {

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational order_of(const Graph& g) { return Rational(as_int(g.order())); }

// ceil(d(G)) = ceil(2e / n).
std::int64_t ceil_avg_degree(const Graph& g) {
    if (g.order() == 0) throw GraphError("average degree of the empty graph is undefined");
    return ceil_div(as_int(2 * g.edge_count()), as_int(g.order()));
}

}  // namespace

Rational potential_f(std::size_t k, const Rational& x) {
    if (x.is_negative()) {
        throw std::domain_error("potential_f: negative argument " + x.str());
    }
    const Rational k1(as_int(k + 1));
    if (x <= k1) {
        return Rational(1) - x / (Rational(2) * k1);
    }
    return Rational(as_int(k + 2)) / (Rational(2) * (x + Rational(1)));
}

Rational caro_tuza_sum(const Graph& g, std::size_t k) {
    std::map<std::size_t, std::int64_t> histogram;
    for (Vertex v = 0; v < g.order(); ++v) ++histogram[g.degree(v)];
    Rational total;
    for (const auto& [deg, count] : histogram) {
        total += Rational(count) * potential_f(k, Rational(as_int(deg)));
    }
    return total;
}

Rational corollary_avg(const Graph& g, std::size_t k) {
    return potential_f(k, g.avg_degree()) * order_of(g);
}

std::optional<Rational> corollary_halfbound(const Graph& g, std::size_t k) {
    const Rational d = g.avg_degree();
    if (d < Rational(as_int(k + 1))) return std::nullopt;
    return Rational(as_int(k + 2)) * order_of(g) / (Rational(2) * (d + Rational(1)));
}

Rational hopkins_staton(const Graph& g, std::size_t k) {
    const std::int64_t classes = ceil_div(as_int(g.max_degree() + 1), as_int(k + 1));
    return order_of(g) / Rational(classes);
}

Rational thm_first_approach_bound(const Graph& g, std::size_t k) {
    const Rational d = g.avg_degree();
    return Rational(as_int(k + 1)) * order_of(g) / (d + Rational(as_int(2 * k + 2)));
}

Rational main_bound(const Graph& g, std::size_t k) {
    const std::int64_t d = ceil_avg_degree(g);
    return Rational(as_int(k + 1)) * order_of(g) / Rational(d + as_int(k + 1));
}

ResidueT residue_t(std::size_t k, std::size_t d) {
    const std::size_t m = k + 1;
    // t = k+1 - (d mod (k+1)) lies in [1, k+1].
    return ResidueT{m - d % m};
}

Rational f_lower(std::size_t k, std::size_t d) {
    const std::size_t t = residue_t(k, d).t;
    return Rational(as_int((k + 1) * (d + 2 * t)), as_int((d + k + t + 1) * (d + t)));
}

Rational f_lower_small_degree(std::size_t k, std::size_t d) {
    if (d > k) {
        throw std::domain_error("f_lower_small_degree needs d <= k");
    }
    return Rational(as_int(2 * k + 2 - d), as_int(2 * k + 2));
}

Rational f1_exact(std::size_t d) {
    if (d % 2 == 0) return Rational(2, as_int(d + 2));
    return Rational(as_int(2 * (d + 2)), as_int((d + 1) * (d + 3)));
}

BigInt h_function(std::size_t r) {
    if (r < 3) throw std::domain_error("h_function needs r >= 3");
    BigInt power = boost::multiprecision::pow(BigInt(r - 1), static_cast<unsigned>(r + 3));
    return (power - 1) / BigInt(r - 2);
}

bool theorem6_check(const Graph& g, std::size_t p, std::size_t q, std::size_t limit) {
    if (p > q) throw std::domain_error("theorem6_check needs p <= q");
    const std::size_t alpha_p = alpha_k_exact(g, p, limit).alpha;
    const std::size_t alpha_q = alpha_k_exact(g, q, limit).alpha;
    const std::size_t factor = static_cast<std::size_t>(ceil_div(as_int(q + 1), as_int(p + 1)));
    return alpha_q <= factor * alpha_p;
}

}  // namespace kindep
