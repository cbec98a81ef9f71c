#include <doctest.h>

#include "kindep/family_spec.hpp"
#include "kindep/generators.hpp"
#include "kindep/table.hpp"

using namespace kindep;

TEST_CASE("witness ratios") {
    const Graph g = instantiate(parse_graph_spec("r8+4*star:3"));
    const WitnessRatio w = witness_ratio(g, 2, 2);
    CHECK(w.ratio == Rational(17, 24));
    CHECK(w.max_degree == 3);
    CHECK(w.oracle_verified);

    CHECK(witness_ratio(thm14_6(2), 2, 2).ratio == Rational(9, 13));
    for (std::size_t k = 0; k <= 3; ++k) {
        for (std::size_t d = k; d <= 8; ++d) {
            CHECK(witness_ratio(complete(d + 1), k, d).ratio ==
                  Rational(static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(d + 1)));
        }
    }
}

TEST_CASE("witness_ratio checks its inputs") {
    CHECK_THROWS_AS(witness_ratio(complete(5), 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(witness_ratio(complete(5), 1, 4, 3), std::invalid_argument);
    CHECK(witness_ratio(complete(5), 1, 4, 2).ratio == Rational(2, 5));
    CHECK_THROWS_AS(witness_ratio(Graph(0), 1, 0), std::invalid_argument);
    // Above the oracle limit a supplied alpha is taken as given.
    const WitnessRatio big = witness_ratio(complete(12), 0, 11, 1, 10);
    CHECK_FALSE(big.oracle_verified);
    CHECK(big.ratio == Rational(1, 12));
    CHECK_THROWS_AS(witness_ratio(complete(12), 0, 11, std::nullopt, 10), std::invalid_argument);
}

TEST_CASE("complements of high-girth regular graphs") {
    // C_5 has girth 5 >= 0+4; its complement is C_5 again, alpha_0 = 2.
    const WitnessRatio w = high_girth_complement_witness(complete_minus_cycle(5), 0);
    CHECK(w.alpha == 2);
    CHECK(w.ratio == Rational(2, 5));
    // The Wagner graph has girth 4: fine for k = 0, too small for k = 1.
    CHECK(high_girth_complement_witness(wagner_r8(), 0).alpha == 2);
    CHECK_THROWS_AS(high_girth_complement_witness(wagner_r8(), 1), std::invalid_argument);
    CHECK_THROWS_AS(high_girth_complement_witness(star(3), 0), std::invalid_argument);
}

TEST_CASE("f(2, d) table rows") {
    const auto rows = table_f2();
    REQUIRE(rows.size() == 11);
    CHECK(rows[4].lower == Rational(4, 9));
    CHECK(rows[4].upper == Rational(1, 2));
    CHECK(to_string(rows[4].witness) == "thm14_5:d=4,q=0");
    CHECK(rows[6].lower == Rational(1, 3));
    CHECK(rows[6].upper == Rational(2, 5));
    CHECK(rows[10].lower == Rational(7, 30));
    CHECK(rows[10].upper == Rational(6, 23));
    CHECK(rows[8].lower == Rational(5, 18));
    REQUIRE(rows[8].discrepancy.has_value());
    CHECK(*rows[8].discrepancy == "recomputed lower 5/18; reference table lists 5/13");
    for (const auto& row : rows) {
        if (row.d != 8) CHECK_FALSE(row.discrepancy.has_value());
        CHECK(row.lower <= row.upper);
    }
    // Lower bounds decrease with d; 5/13 would not.
    for (std::size_t d = 1; d < rows.size(); ++d) CHECK(rows[d].lower < rows[d - 1].lower);
    CHECK(Rational(5, 13) > rows[7].lower);
}

TEST_CASE("table renderings") {
    const auto rows = table_f2();
    const auto j = table_to_json(rows);
    CHECK(j.size() == 11);
    CHECK(j[2]["upper"] == "9/13");
    CHECK(j[8]["reference_lower"] == "5/13");
    CHECK(j[0]["discrepancy"].is_null());
    const std::string csv = table_to_csv(rows);
    CHECK(csv.find("\n3,1/2,3/5,\"thm14_5:d=3,q=0\",3,5,1/2,3/5,\n") != std::string::npos);
    CHECK(table_to_text(rows).find("5/13") != std::string::npos);
}
