#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "kindep/generators.hpp"
#include "kindep/graph_io.hpp"

using namespace kindep;

TEST_CASE("edge list round trip") {
    for (const auto& [name, g] : testing::main_corpus(60)) {
        CAPTURE(name);
        std::stringstream buffer;
        write_edge_list(buffer, g);
        CHECK(read_edge_list(buffer) == g);
    }
}

TEST_CASE("dimacs round trip and auto-detection") {
    const Graph g = thm14_6(2);
    std::stringstream buffer;
    write_dimacs(buffer, g);
    CHECK(buffer.str().rfind("p edge 13 13", 0) == 0);
    CHECK(read_graph(buffer) == g);
}

TEST_CASE("comments and blank lines are skipped") {
    std::istringstream in("# triangle\n3 3\n0 1\n\n# middle\n1 2\n2 0\n");
    CHECK(read_graph(in) == complete(3));
    std::istringstream dimacs("c hello\np col 3 2\ne 1 2\ne 2 3\n");
    CHECK(read_graph(dimacs) == Graph::build(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("parse errors report the line") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_graph(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
    CHECK(line_of("3 1\n0 5\n") == 2);
    CHECK(line_of("3 2\n0 1\n") == 2);
    CHECK(line_of("p edge 3 1\ne 0 1\n") == 2);
    CHECK(line_of("banana\n") == 1);
    CHECK(line_of("2 1\n1 1\n") == 2);
}

TEST_CASE("empty graph with ten vertices") {
    std::istringstream in("10 0\n");
    const Graph g = read_graph(in);
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("vertex set files") {
    std::istringstream in("# set\n4 2 2\n0\n");
    CHECK(read_vertex_set(in) == VertexSet{0, 2, 4});
    std::ostringstream out;
    write_vertex_set(out, VertexSet{1, 5});
    CHECK(out.str() == "1 5\n");
    std::istringstream bad("1 -2\n");
    CHECK_THROWS_AS(read_vertex_set(bad), ParseError);
}
