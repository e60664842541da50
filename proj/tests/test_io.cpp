#include <doctest.h>

#include "cominor/error.hpp"
#include "cominor/generators.hpp"
#include "cominor/io.hpp"

using namespace cominor;

TEST_CASE("edge list parses undirected and directed forms") {
  const auto g = parse_edge_list("n 3\n0 1\n1 2 # trailing\n# comment\n");
  REQUIRE(std::holds_alternative<Graph>(g));
  CHECK(std::get<Graph>(g).edge_count() == 2);
  const auto d = parse_edge_list("n 3\n0 > 1\n1 > 2\n");
  REQUIRE(std::holds_alternative<Digraph>(d));
  CHECK(std::get<Digraph>(d).has_arc(0, 1));
  CHECK_FALSE(std::get<Digraph>(d).has_arc(1, 0));
}

TEST_CASE("dead ids round-trip") {
  Graph g = Graph::cycle(5);
  g.remove_vertex(3);
  const Graph back = parse_graph(to_edge_list(g));
  CHECK(back == g);
  Digraph d = Digraph::directed_cycle(4);
  d.remove_vertex(0);
  CHECK(parse_digraph(to_edge_list(d)) == d);
}

TEST_CASE("malformed input is a parse error") {
  for (const char* bad : {"0 1\n", "n 2\n0 5\n", "n x\n", "n 2\n0 1 2\n", "n 2\n0 > 1\n1 0\n"}) {
    try {
      (void)parse_edge_list(std::string(bad));
      FAIL("accepted: " << bad);
    } catch (const GraphError& e) {
      CHECK(e.kind() == ErrorKind::kParse);
    }
  }
}

TEST_CASE("host hash is stable and discriminating") {
  CHECK(host_hash(gen_petersen()) == host_hash(gen_petersen()));
  CHECK(host_hash(Graph::cycle(5)) != host_hash(Graph::path(5)));
  CHECK(host_hash(Digraph::directed_cycle(3)) != host_hash(Digraph::directed_cycle(3).reversed()));
}

TEST_CASE("property: generated graphs round-trip") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = gen_min_degree_graph(10, 3, s);
    CHECK(parse_graph(to_edge_list(g)) == g);
    const Digraph d = gen_min_outdegree_digraph(10, 3, s);
    CHECK(parse_digraph(to_edge_list(d)) == d);
  }
}
