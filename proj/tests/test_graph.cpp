#include <doctest.h>

#include <random>

#include "cominor/generators.hpp"
#include "cominor/graph.hpp"

using namespace cominor;

TEST_CASE("stable ids survive deletion and contraction") {
  Graph g = Graph::cycle(5);
  g.remove_vertex(2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.capacity() == 5);
  CHECK_FALSE(g.is_live(2));
  CHECK(g.has_edge(3, 4));
  ContractionDelta d;
  const Graph h = contract_edge(g, {3, 4}, d);
  CHECK(d.survivor == 3);
  CHECK(d.removed == 4);
  CHECK(h.has_edge(0, 3));
  CHECK(h.vertex_count() == 3);
}

TEST_CASE("contracting a non-edge is a domain error") {
  const Graph g = Graph::path(3);
  try {
    (void)contract_edge(g, {0, 2});
    FAIL("expected an error");
  } catch (const GraphError& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}

TEST_CASE("contraction drops loops and parallel edges") {
  const Graph k4 = Graph::complete(4);
  const Graph k3 = contract_edge(k4, {0, 1});
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
}

TEST_CASE("butterfly contraction legality") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(2, 1);
  // out(0) = 2 and in(1) = 2: illegal.
  try {
    (void)butterfly_contract(d, {0, 1});
    FAIL("expected kNotButterfly");
  } catch (const GraphError& e) {
    CHECK(e.kind() == ErrorKind::kNotButterfly);
  }
  const Digraph c = butterfly_contract(d, {2, 1});
  CHECK(c.vertex_count() == 2);
  CHECK(c.has_arc(0, 1));
}

TEST_CASE("apex extensions") {
  const Graph p = add_apex(Graph::path(3));
  CHECK(p.vertex_count() == 4);
  CHECK(p.degree(3) == 3);
  const Digraph d = add_apex_source(Digraph::directed_cycle(3));
  CHECK(d.out_degree(3) == 3);
  CHECK(d.in_degree(3) == 0);
}

TEST_CASE("property: contraction preserves the edge bound and degree profile consistency") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen_min_degree_graph(6 + trial % 8, 3, rng());
    const auto edges = g.edges();
    const Edge e = edges[rng() % edges.size()];
    const Graph h = contract_edge(g, e);
    CHECK(h.vertex_count() == g.vertex_count() - 1);
    CHECK(h.edge_count() <= g.edge_count() - 1);
    const auto prof = degree_profile(g);
    CHECK(prof.min_degree >= 3);
  }
}

TEST_CASE("sink component has no leaving arcs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = gen_min_outdegree_digraph(8, 2, rng());
    const auto sink = strongly_connected_sink_component(d);
    std::vector<char> in(d.capacity(), 0);
    for (int v : sink) in[v] = 1;
    for (int v : sink)
      for (int w : d.out_neighbors(v)) CHECK(in[w]);
  }
}

TEST_CASE("generators meet their degree bounds") {
  for (int t = 2; t <= 6; ++t) {
    CHECK(degree_profile(gen_min_degree_graph(t + 5, t, t)).min_degree >= t);
    CHECK(degree_profile(gen_min_outdegree_digraph(t + 5, t, t)).min_out >= t);
  }
  CHECK(gen_universal(1).vertex_count() == 6);
  CHECK(gen_icosahedron().vertex_count() == 12);
  CHECK(gen_icosahedron().edge_count() == 30);
}
