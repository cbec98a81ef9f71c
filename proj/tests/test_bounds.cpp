#include <doctest.h>

#include "corpus.hpp"
#include "kindep/bound_report.hpp"
#include "kindep/bounds.hpp"
#include "kindep/generators.hpp"
#include "kindep/oracle.hpp"

using namespace kindep;

namespace {


}  // namespace

TEST_CASE("potential values") {
    CHECK(potential_f(3, 0) == 1);
    CHECK(potential_f(3, 4) == Rational(1, 2));
    CHECK(potential_f(0, 1) == Rational(1, 2));
    CHECK(potential_f(0, 3) == Rational(1, 4));  // Caro-Wei term 1/(x+1)
    CHECK(potential_f(2, Rational(3, 2)) == Rational(3, 4));
    CHECK(potential_f(2, 9) == Rational(1, 5));
    CHECK_THROWS_AS(potential_f(1, -1), std::domain_error);
}

TEST_CASE("potential is strictly decreasing and convex on a fine grid") {
    for (std::size_t k = 0; k <= 6; ++k) {
        for (std::int64_t a = 0; a < 60; ++a) {
            const Rational x(a, 5);
            const Rational y(a + 1, 5);
            CHECK(potential_f(k, x) > potential_f(k, y));
            for (std::int64_t b = a; b < 60; b += 7) {
                const Rational z(b, 5);
                CHECK(2 * potential_f(k, (x + z) / 2) <= potential_f(k, x) + potential_f(k, z));
            }
        }
    }
}

TEST_CASE("potential decrements shrink and the product identity holds past k+1") {
    for (std::size_t k = 0; k <= 10; ++k) {
        const auto top = static_cast<std::int64_t>(3 * (k + 2));
        for (std::int64_t i = 0; i <= top; ++i) {
            for (std::int64_t j = i; j <= top; ++j) {
                CHECK(potential_f(k, i) - potential_f(k, i + 1) >= potential_f(k, j) - potential_f(k, j + 1));
            }
            if (i >= static_cast<std::int64_t>(k) + 1) {
                CHECK(i * potential_f(k, i - 1) == (i + 1) * potential_f(k, i));
            }
        }
    }
}

TEST_CASE("graph bounds on small examples") {
    CHECK(caro_tuza_sum(Graph(10), 0) == 10);
    CHECK(main_bound(complete(5), 2) == Rational(15, 7));
    CHECK(main_bound(j_graph(6), 1) == 2);
    CHECK(thm_first_approach_bound(j_graph(6), 1) == Rational(3, 2));
    CHECK(hopkins_staton(complete(5), 1) == Rational(5, 3));
    CHECK(corollary_avg(complete(4), 0) == 1);
    CHECK(caro_tuza_sum(complete(4), 1) == Rational(3, 2));
    CHECK_FALSE(corollary_halfbound(star(3), 1).has_value());
    CHECK(corollary_halfbound(complete(5), 1) == Rational(15, 10));
}

TEST_CASE("bound relations on the corpus") {
    for (const auto& [name, g] : testing::main_corpus(200)) {
        CAPTURE(name);
        for (std::size_t k = 0; k <= 3; ++k) {
            CHECK(caro_tuza_sum(g, k) >= corollary_avg(g, k));  // Jensen
            if (auto half = corollary_halfbound(g, k)) CHECK(corollary_avg(g, k) == *half);
            // Observation form of the Hopkins-Staton bound.
            const std::size_t delta = g.max_degree();
            const std::size_t r = (k + 1 - (delta + 1) % (k + 1)) % (k + 1);
            CHECK(hopkins_staton(g, k) ==
                  Rational(static_cast<std::int64_t>((k + 1) * g.order()), static_cast<std::int64_t>(delta + r + 1)));
            const auto ceil_d = static_cast<std::size_t>(g.avg_degree().ceil_int());
            CHECK(f_lower(k, ceil_d) * static_cast<std::int64_t>(g.order()) >= main_bound(g, k));
            CHECK(main_bound(g, k) >= thm_first_approach_bound(g, k));
        }
    }
}

TEST_CASE("residue and f_lower") {
    CHECK(residue_t(2, 2).t == 1);
    CHECK(residue_t(2, 0).t == 3);
    CHECK(residue_t(2, 3).t == 3);
    CHECK(residue_t(1, 5).t == 1);
    CHECK(f_lower(2, 2) == Rational(2, 3));
    CHECK(f_lower(2, 7) == Rational(11, 36));
    CHECK(f_lower(2, 8) == Rational(5, 18));
    CHECK(f_lower(2, 10) == Rational(7, 30));
    for (std::size_t k = 0; k <= 8; ++k) {
        CHECK(f_lower(k, 0) == 1);
        for (std::size_t d = 0; d <= 30; ++d) {
            const Rational value = f_lower(k, d);
            CHECK(value >= Rational(static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(d + k + 1)));
            CHECK(f_lower(k, d + 1) < value);
            if (d <= k) CHECK(f_lower_small_degree(k, d) == value);
        }
        CHECK(f_lower(k, 1) == Rational(static_cast<std::int64_t>(2 * k + 1), static_cast<std::int64_t>(2 * k + 2)));
    }
    CHECK_THROWS_AS(f_lower_small_degree(1, 2), std::domain_error);
}

TEST_CASE("exact f(1, d)") {
    CHECK(f1_exact(0) == 1);
    CHECK(f1_exact(1) == Rational(3, 4));
    CHECK(f1_exact(4) == Rational(1, 3));
    for (std::size_t d = 0; d <= 20; ++d) {
        CHECK(f1_exact(d) == f_lower(1, d));
        for (std::size_t t = 0; t <= d && d + t <= 40; ++t) {
            CHECK(2 * f1_exact(d) <= f1_exact(d - t) + f1_exact(d + t));
        }
    }
    for (std::size_t d = 0; d <= 8; d += 2) {
        const Graph j = j_graph(d + 2);
        CHECK(Rational(static_cast<std::int64_t>(alpha_k_exact(j, 1).alpha), static_cast<std::int64_t>(d + 2)) ==
              f1_exact(d));
    }
}

TEST_CASE("h function") {
    CHECK(h_function(3) == 63);  // (2^6 - 1) / 1
    CHECK(h_function(4) == 1093);  // (3^7 - 1) / 2
    CHECK_THROWS(h_function(2));
}

TEST_CASE("upper catalog applicability") {
    const BoundReport r = f_upper_catalog(2, 3);
    CHECK(r.find("triangle_deleted_cliques")->value == Rational(3, 5));
    CHECK(r.find("triangle_deleted_cliques")->applicable);
    CHECK_FALSE(r.find("complete_minus_matching")->applicable);
    CHECK(r.find("f_lower")->value == Rational(1, 2));

    const BoundReport s = f_upper_catalog(2, 2);
    CHECK(s.find("stars_and_clique")->value == Rational(9, 13));
    CHECK(s.find("stars_and_clique")->applicable);

    const BoundReport t = f_upper_catalog(1, 2);
    CHECK(t.find("complete_minus_matching")->applicable);
    CHECK(t.find("complete_minus_matching")->value == f1_exact(2));

    const BoundReport big = f_upper_catalog(3, 2 * 63 - 4);  // smallest d with d+k+1 even above 2h(3)-k-1
    CHECK(big.find("high_girth_k_regular")->applicable);
    CHECK_FALSE(f_upper_catalog(3, 2 * 63 - 5).find("high_girth_k_regular")->applicable);
    CHECK_FALSE(big.find("high_girth_asymptotic")->value.has_value());
    CHECK(big.find("high_girth_asymptotic")->applicable);

    CHECK(f_upper_catalog(2, 10).find("triangle_deleted_cliques")->value == Rational(6, 23));
    CHECK(f_upper_catalog(2, 11).find("triangle_deleted_cliques")->value == Rational(9, 37));
}

TEST_CASE("every catalog upper value is at least f_lower") {
    for (std::size_t k = 0; k <= 5; ++k) {
        for (std::size_t d = 0; d <= 40; ++d) {
            const BoundReport r = f_upper_catalog(k, d);
            const Rational lower = *r.find("f_lower")->value;
            for (const auto& row : r.rows) {
                if (row.kind == BoundKind::upper && row.applicable && row.value) {
                    CAPTURE(row.name);
                    CHECK(*row.value >= lower);
                }
            }
        }
    }
}

TEST_CASE("alpha_q versus alpha_p inequality on a few graphs") {
    CHECK(theorem6_check(complete(7), 0, 3));
    CHECK(theorem6_check(wagner_r8(), 1, 2));
    CHECK_THROWS(theorem6_check(complete(3), 2, 1));
}

TEST_CASE("report serializations") {
    const BoundReport r = graph_lower_bounds(j_graph(6), 1);
    CHECK(r.find("main_bound")->integer_bound == BigInt(2));
    CHECK(r.find("first_approach")->integer_bound == BigInt(2));
    const auto j = to_json(r);
    CHECK(j["inputs"]["avg_degree"] == "4/1");
    bool found = false;
    for (const auto& row : j["rows"]) {
        if (row["name"] == "caro_tuza_sum") {
            CHECK(row["value"] == "9/5");
            found = true;
        }
    }
    CHECK(found);
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("name,kind,value,applicable,integer_bound,note\n", 0) == 0);
    CHECK(csv.find("main_bound,lower,2/1,true,2,") != std::string::npos);
    CHECK(to_text(r).find("main_bound") != std::string::npos);
    CHECK(graph_lower_bounds(Graph(10), 0).find("caro_tuza_sum")->value == 10);
}
