#include <doctest.h>

#include <random>

#include "cominor/embeddings.hpp"
#include "cominor/generators.hpp"
#include "cominor/minor_finder.hpp"
#include "cominor/oracle.hpp"
#include "cominor/schemes.hpp"

using namespace cominor;

namespace {

void check_apex_minor(const Graph& g, const OrderingScheme& s) {
  const auto res = find_apex_minor(g, s);
  const auto& mu = res.embedding;
  CHECK(verify_minor(g, res.pattern, mu).ok);
  REQUIRE(mu.apex == s.host().capacity());
  CHECK(mu.branch_sets[mu.apex].size() == 1);
  CHECK(res.log.replay(g) == res.reduced);
}

}  // namespace

TEST_CASE("Petersen graph with a path pattern gives a K4 minor") {
  const Graph p = gen_petersen();
  const auto s = make_tree_scheme(Graph::path(3), 0);
  const auto res = find_apex_minor(p, *s);
  CHECK(verify_minor(p, res.pattern, res.embedding).ok);
  CHECK(res.pattern.vertex_count() == 4);
  CHECK(res.pattern.edge_count() == 5);
}

TEST_CASE("degree precondition is enforced") {
  const auto s = make_snake_scheme(gen_snake(5), 0, 1);
  try {
    (void)find_apex_minor(Graph::complete(5), *s);
    FAIL("expected kHypothesis");
  } catch (const GraphError& e) {
    CHECK(e.kind() == ErrorKind::kHypothesis);
  }
}

TEST_CASE("complete graphs one vertex larger than the pattern suffice") {
  for (int t = 3; t <= 7; ++t) {
    const Graph k = Graph::complete(t + 1);
    check_apex_minor(k, *make_snake_scheme(gen_snake(t), 0, 1));
    check_apex_minor(k, *make_tree_scheme(Graph::path(t), 0));
  }
}

TEST_CASE("property: totality over seeded instances of every family") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int t = 3 + trial % 4;
    const int n = t + 1 + static_cast<int>(rng() % 20);
    const Graph g = gen_min_degree_graph(n, t, rng());
    check_apex_minor(g, *make_tree_scheme(gen_tree(t, rng()), 0));
    check_apex_minor(g, *make_cactus_scheme(gen_cactus(t, rng()), 0));
    if (t % 3 == 0) check_apex_minor(g, *make_snake_scheme(gen_snake(t), 0, 1));
    if (t == 6) check_apex_minor(g, *make_universal_scheme(1));
  }
}

TEST_CASE("property: minors found by the finder agree with the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = gen_min_degree_graph(7, 3, rng());
    const auto res = find_apex_minor(g, *make_tree_scheme(Graph::path(3), 0));
    CHECK(oracle_minor(g, res.pattern).verdict == Verdict::kYes);
  }
}
