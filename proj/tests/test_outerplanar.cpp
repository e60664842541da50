#include <doctest.h>

#include <random>

#include "cominor/generators.hpp"
#include "cominor/outerplanar.hpp"
#include "cominor/suite.hpp"

using namespace cominor;

TEST_CASE("recognizer accepts family members and rejects non-members") {
  for (int h = 0; h <= 3; ++h) {
    const auto ts = recognize_maximal_outerplanar(gen_universal(h));
    REQUIRE(ts.has_value());
    const auto shape = weak_dual_tree(*ts);
    CHECK(shape.complete_cubic);
    CHECK(shape.height == h);
    CHECK(static_cast<int>(ts->host.vertex_count()) == 3 << h);
  }
  for (int h = 1; h <= 3; ++h) {
    const auto ts = recognize_maximal_outerplanar(gen_binary(h));
    REQUIRE(ts.has_value());
    CHECK(weak_dual_tree(*ts).complete_binary);
  }
  for (int n = 3; n <= 10; ++n) {
    const auto s = recognize_maximal_outerplanar(gen_snake(n));
    REQUIRE(s.has_value());
    CHECK(weak_dual_tree(*s).path);
    CHECK(s->triangles.size() == static_cast<std::size_t>(n - 2));
    CHECK(recognize_maximal_outerplanar(gen_fan(n)).has_value());
  }
  CHECK_FALSE(recognize_maximal_outerplanar(Graph::complete(4)).has_value());
  CHECK_FALSE(recognize_maximal_outerplanar(Graph::cycle(5)).has_value());
  CHECK_FALSE(recognize_maximal_outerplanar(gen_k23_plus()).has_value());
}

TEST_CASE("outer cycle is Hamiltonian and made of host edges") {
  const auto ts = recognize_maximal_outerplanar(gen_universal(2));
  REQUIRE(ts.has_value());
  const auto& c = ts->outer_cycle;
  CHECK(c.size() == 12);
  CHECK(c.front() == 0);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(ts->host.has_edge(c[i], c[(i + 1) % c.size()]));
  CHECK(ts->diagonals.size() == ts->triangles.size() - 1);
}

TEST_CASE("tree shapes") {
  const auto p = classify_tree(Graph::path(5));
  CHECK(p.path);
  CHECK(p.radius == 2);
  CHECK(p.centers == std::vector<int>{2});
  const auto q = classify_tree(Graph::path(4));
  CHECK(q.centers == std::vector<int>{1, 2});
  CHECK(eccentricity(Graph::path(4), 0) == 3);
}

TEST_CASE("tree enumeration counts") {
  const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(all_trees(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("property: leaf-face deletion and boundary contraction on outerplanar families") {
  for (int n = 4; n <= 10; ++n)
    for (const Graph& g : {gen_snake(n), gen_fan(n)}) {
      const auto [c1, f1] = check_leaf_deletions(g);
      const auto [c2, f2] = check_boundary_contractions(g);
      CHECK(c1 > 0);
      CHECK(c2 > 0);
      CHECK(f1 == 0);
      CHECK(f2 == 0);
    }
  for (int h = 0; h <= 2; ++h) {
    CHECK(check_leaf_deletions(gen_universal(h)).second == 0);
    CHECK(check_boundary_contractions(gen_universal(h)).second == 0);
  }
}
