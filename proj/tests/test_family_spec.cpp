#include <doctest.h>

#include "kindep/family_spec.hpp"
#include "kindep/generators.hpp"

using namespace kindep;

TEST_CASE("positional and named arguments") {
    const FamilySpec a = parse_family_spec("thm14_5:d=3,q=0");
    CHECK(a.family == Family::thm14_5);
    CHECK(a.parameters == std::vector<std::uint64_t>{3, 0});
    CHECK(parse_family_spec("thm14_5:3,0") == a);
    CHECK(parse_family_spec("thm14_5:q=0,d=3") == a);

    const FamilySpec g = parse_family_spec("gnm:n=30,m=60,seed=7");
    CHECK(g.family == Family::random_gnm);
    CHECK(g.seed == 7U);
    CHECK(instantiate(g) == random_gnm(30, 60, 7));
    CHECK_FALSE(parse_family_spec("gnm:n=3,m=2").seed.has_value());
}

TEST_CASE("aliases and canonical text") {
    CHECK(parse_family_spec("j:6").family == Family::j_n);
    CHECK(parse_family_spec("K:4").family == Family::complete);
    CHECK(parse_family_spec("r8").family == Family::wagner_r8);
    CHECK(to_string(parse_family_spec("j:6")) == "j_n:n=6");
    CHECK(to_string(parse_family_spec("gnm:5,4,9")) == "random_gnm:n=5,m=4,seed=9");
    CHECK(to_string(parse_graph_spec("r8+4*star:3")) == "wagner_r8+4*star:m=3");
    CHECK(family_name(Family::complete_minus_cycle) == std::string("complete_minus_cycle"));
    CHECK(param_names(Family::complete_minus_clique) == std::vector<std::string>{"n", "q"});
}

TEST_CASE("canonical text parses back to the same spec") {
    for (const char* text : {"complete:5", "kmq:6,2", "kmc:7", "star:4", "r8", "thm14_5:10,1", "thm14_6:3",
                             "thm12_2:2", "thm10_odd:3", "blend:complete:2/complete:4", "gnm:n=9,m=8,seed=1",
                             "2*j:4+star:2+gnm:6,5"}) {
        CAPTURE(text);
        const GraphSpec spec = parse_graph_spec(text);
        CHECK(parse_graph_spec(to_string(spec)) == spec);
    }
}

TEST_CASE("unions and copies instantiate left to right") {
    const Graph g = instantiate(parse_graph_spec("r8+4*star:3"));
    CHECK(g.order() == 24);
    CHECK(g.edge_count() == 12 + 4 * 3);
    CHECK(g.degree(8) == 3);
    CHECK(g.degree(9) == 1);
    CHECK(instantiate(parse_graph_spec("blend:complete:2/complete:4")).avg_degree() == 2);
}

TEST_CASE("seed helpers") {
    const GraphSpec spec = parse_graph_spec("star:2+gnm:n=10,m=9,seed=4");
    CHECK(first_seed(spec) == 4U);
    CHECK(first_seed(with_seed(spec, 11)) == 11U);
    CHECK_FALSE(first_seed(parse_graph_spec("j:4")).has_value());
}

TEST_CASE("malformed specs are rejected") {
    CHECK_THROWS_AS(parse_family_spec("banana:3"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("complete"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("complete:n=3,n=4"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("complete:3,4"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("complete:x=3"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("complete:-3"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("thm14_5:d=3,0"), SpecError);
    CHECK_THROWS_AS(parse_family_spec("blend:complete:2"), SpecError);
    CHECK_THROWS_AS(parse_graph_spec(""), SpecError);
    CHECK_THROWS_AS(parse_graph_spec("x*j:4"), SpecError);
}
