#include <doctest.h>

#include <algorithm>
#include <random>

#include "cominor/generators.hpp"
#include "cominor/orderings.hpp"
#include "cominor/schemes.hpp"
#include "cominor/suite.hpp"

using namespace cominor;

TEST_CASE("recursive orderings") {
  CHECK(is_recursive_ordering(Graph::path(4), {1, 0, 2, 3}));
  CHECK_FALSE(is_recursive_ordering(Graph::path(4), {0, 2, 1, 3}));
  CHECK(is_recursive_ordering(Graph::complete(3), {2, 0, 1}));
  // Every vertex of C4 after the first three sees two earlier vertices that are not adjacent.
  CHECK_FALSE(is_recursive_ordering(Graph::cycle(4), {0, 1, 2, 3}));
}

TEST_CASE("C4 and K4 have no contractible ordering set") {
  for (const Graph& h : {Graph::cycle(4), Graph::complete(4)}) {
    Ordering w{0, 1, 2, 3};
    do CHECK_FALSE(verify_contractible(h, {w}, std::nullopt).ok);
    while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("glue examples from the construction rules") {
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const auto a = make_tree_scheme(Graph::from_edges(2, std::vector<Edge>{{0, 1}}), 0);
  Graph other(4);
  other.remove_vertex(0);
  other.remove_vertex(1);
  other.add_edge(2, 3);
  const auto b = restrict_root(make_tree_scheme(other, 2), {});
  const auto disjoint = glue_schemes(a, b, 1);
  CHECK(disjoint->host().edge_count() == 2);
  CHECK(verify_scheme(*disjoint).ok);

  const auto k3 = make_single_ordering_scheme(Graph::complete(3), {0, 1}, {0, 1, 2}, "triangle");
  const Edge e = k3->contractible_edges().front().edge;
  Graph tri(4);
  tri.add_edge(e.u, e.v);
  tri.add_edge(e.u, 3);
  tri.add_edge(e.v, 3);
  const int third = 3 - e.u - e.v;
  tri.remove_vertex(third);
  const auto t2 = make_single_ordering_scheme(tri, {e.u, e.v}, {e.u, e.v, 3}, "triangle");
  const auto diamond = glue_schemes(k3, t2, 3);
  CHECK(diamond->host().edge_count() == 5);
  CHECK(verify_scheme(*diamond).ok);
}

TEST_CASE("tree schemes refuse contraction queries") {
  const auto s = make_tree_scheme(Graph::path(4), 0);
  try {
    (void)s->replace(s->initial(), 3, 0, 1);
    FAIL("expected kContractStep");
  } catch (const GraphError& e) {
    CHECK(e.kind() == ErrorKind::kContractStep);
  }
}

TEST_CASE("property: every emitted ordering is rooted and recursive; every replacement is an isomorphism") {
  std::vector<SchemePtr> schemes;
  for (int n = 3; n <= 8; ++n) schemes.push_back(make_snake_scheme(gen_snake(n), 0, 1));
  schemes.push_back(make_universal_scheme(1));
  schemes.push_back(make_binary_scheme(2));
  for (std::uint64_t s = 0; s < 5; ++s) schemes.push_back(make_cactus_scheme(gen_cactus(7, s), 0));
  for (const auto& g : glue_corpus()) schemes.push_back(g);
  for (const auto& s : schemes) {
    const auto& h = s->host();
    const auto m = materialize(*s, 5000);
    for (const auto& w : m.orderings) {
      REQUIRE(is_recursive_ordering(h, w));
      for (std::size_t k = 0; k < s->root().size(); ++k) CHECK(w[k] == s->root()[k]);
      const int start = s->root().size() >= 2 ? 3 : 2;
      for (int st = start; st < static_cast<int>(w.size()); ++st) {
        const auto pos = earlier_neighbor_positions(h, w, st);
        if (pos.size() != 2) continue;
        const auto r = s->replace(w, st, pos[0], pos[1]);
        CHECK(check_replacement(h, s->root(), w, st, pos[0], pos[1], r));
      }
    }
    CHECK(verify_scheme(*s).ok);
  }
}
