#include <doctest.h>

#include <sstream>

#include "planarize/generators.hpp"
#include "planarize/io.hpp"

using namespace planarize;

TEST_SUITE("io") {

TEST_CASE("plain dialect with header and comments") {
  const auto g = parse_graph("# triangle plus isolated\np 4 3\n0 1\n1 2 # inline\n2 0\n");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.adjacent(0, 2));
}

TEST_CASE("headerless edge list") {
  const auto g = parse_graph("0 1\n1 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("DIMACS dialect is 1-based") {
  const auto g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_graph("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 3\n"), LoopInInput);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 2\ne 2 3\n"), ParseError);
}

TEST_CASE("writer is sorted and round-trips byte for byte") {
  for (const auto& name : fixture_names()) {
    const std::string text = format_graph(generate(FamilySpec::fixture(name)));
    CHECK(format_graph(parse_graph(text)) == text);
  }
  const std::string rr = format_graph(random_regular(30, 5, 3));
  CHECK(format_graph(parse_graph(rr)) == rr);
  CHECK(format_graph(parse_graph("2 1\n1 0\n")) == "p 3 2\n0 1\n1 2\n");
}

TEST_CASE("vertex sets") {
  std::istringstream in("# S\n3\n1\n\n4\n");
  CHECK(read_vertex_set(in) == std::vector<VertexId>{3, 1, 4});
  std::istringstream bad("1 -2\n");
  CHECK_THROWS_AS(read_vertex_set(bad), ParseError);
}

}  // TEST_SUITE
