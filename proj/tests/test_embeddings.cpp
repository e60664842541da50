#include <doctest.h>

#include <random>

#include "cominor/digraph_finder.hpp"
#include "cominor/embeddings.hpp"
#include "cominor/generators.hpp"
#include "cominor/oracle.hpp"

using namespace cominor;

TEST_CASE("minor verifier accepts a valid model and names violations") {
  const Graph c6 = Graph::cycle(6);
  MinorEmbedding mu;
  mu.branch_sets = {{0, 1}, {2, 3}, {4, 5}};
  CHECK(verify_minor(c6, Graph::complete(3), mu).ok);
  mu.branch_sets = {{0, 2}, {1}, {3, 4, 5}};
  const Check bad = verify_minor(c6, Graph::complete(3), mu);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.violation.empty());
  mu.branch_sets = {{0, 1}, {1, 2}, {3, 4, 5}};
  CHECK_FALSE(verify_minor(c6, Graph::complete(3), mu).ok);
}

TEST_CASE("subdivision verifier checks internal disjointness") {
  Graph g = Graph::cycle(4);
  g.add_edge(0, 2);
  SubdivisionEmbedding s;
  s.branch = {0, 2};
  s.paths = {{{0, 1}, {0, 1, 2}}};
  CHECK(verify_subdivision(g, Graph::path(2), s).ok);
  s.paths = {{{0, 1}, {0, 3, 1, 2}}};
  CHECK_FALSE(verify_subdivision(g, Graph::path(2), s).ok);
}

TEST_CASE("property: minor to subdivision conversion on cubic patterns") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = gen_min_degree_graph(8, 3, rng());
    const auto r = oracle_minor(g, Graph::complete(4));
    if (r.verdict != Verdict::kYes) continue;
    CHECK(verify_minor(g, Graph::complete(4), *r.certificate).ok);
    const auto s = minor_to_subdivision(g, Graph::complete(4), *r.certificate);
    CHECK(verify_subdivision(g, Graph::complete(4), s).ok);
  }
}

TEST_CASE("property: butterfly restriction and subdivision conversion") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int k1 = 2 + trial % 2, k2 = 1 + trial % 2;
    const Digraph d = gen_min_outdegree_digraph(10, k1 + k2 - 1, rng());
    const Digraph tree = two_block_tree(k1, k2);
    const auto b = find_apex_inarb_butterfly(d, tree);
    const Digraph w = two_block_wheel(k1, k2);
    const auto restricted = restrict_butterfly(b.embedding, w);
    CHECK(verify_butterfly(d, w, restricted).ok);
    const auto sub = butterfly_to_subdivision(d, w, restricted);
    CHECK(verify_subdivision(d, w, sub).ok);
  }
}

TEST_CASE("wheel pattern shapes") {
  for (int t = 2; t <= 6; ++t) {
    CHECK(directed_wheel_plus(t).arc_count() == static_cast<std::size_t>(2 * t));
    CHECK(directed_wheel_w1(t).arc_count() == static_cast<std::size_t>(2 * t + 1));
    CHECK(directed_wheel_w2(t).has_arc(0, t));
    CHECK_FALSE(directed_wheel_w2(t).has_arc(t, 0));
  }
}
