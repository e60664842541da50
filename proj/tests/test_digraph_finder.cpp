#include <doctest.h>

#include <random>

#include "cominor/digraph_finder.hpp"
#include "cominor/embeddings.hpp"
#include "cominor/generators.hpp"
#include "cominor/iso.hpp"

using namespace cominor;

TEST_CASE("in-arborescence root detection") {
  Digraph t(3);
  t.add_arc(1, 0);
  t.add_arc(2, 0);
  CHECK(in_arborescence_root(t) == 0);
  try {
    (void)in_arborescence_root(Digraph::directed_cycle(3));
    FAIL("a cycle is not an in-arborescence");
  } catch (const GraphError& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}

TEST_CASE("apex butterfly in a bioriented clique") {
  const Digraph k = Digraph::biorientation(Graph::complete(5));
  const Digraph t = gen_inarborescence(4, 1);
  const auto res = find_apex_inarb_butterfly(k, t);
  CHECK(verify_butterfly(k, res.pattern, res.embedding).ok);
  CHECK(res.embedding.branch[res.embedding.apex].vertices().size() == 1);
}

TEST_CASE("hypothesis errors below the out-degree threshold") {
  const Digraph c = Digraph::directed_cycle(6);
  auto expect_hypothesis = [](auto f) {
    try {
      f();
      FAIL("expected kHypothesis");
    } catch (const GraphError& e) {
      CHECK(e.kind() == ErrorKind::kHypothesis);
    }
  };
  expect_hypothesis([&] { (void)find_wheel_subdivision(c, 2); });
  expect_hypothesis([&] { (void)find_apex_inarb_butterfly(c, gen_inarborescence(2, 0)); });
  expect_hypothesis([&] { (void)find_two_block_wheel(c, 2, 1); });
}

TEST_CASE("two-block wheel patterns") {
  const Digraph w = two_block_wheel(3, 2);
  CHECK(w.vertex_count() == 5);
  const Digraph t = two_block_tree(3, 2);
  CHECK(in_arborescence_root(t) == 0);
  CHECK(t.vertex_count() == 4);
}

TEST_CASE("sink-free K4 orientations") {
  for (const Digraph& h : {directed_wheel_plus(3), directed_wheel_w2(3)}) {
    CHECK(h.vertex_count() == 4);
    CHECK(h.underlying().edge_count() == 6);
    for (int v : h.vertices()) CHECK(h.out_degree(v) >= 1);
  }
  CHECK_FALSE(are_isomorphic(directed_wheel_plus(3), directed_wheel_w2(3)));
}

TEST_CASE("property: every digraph search result verifies") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const int t = 2 + trial % 4;
    const int n = t + 1 + static_cast<int>(rng() % 15);
    const Digraph d = gen_min_outdegree_digraph(n, t, rng());
    const auto b = find_apex_inarb_butterfly(d, gen_inarborescence(t, rng()));
    CHECK(verify_butterfly(d, b.pattern, b.embedding).ok);
    const auto w = find_wheel_subdivision(d, t);
    CHECK(verify_subdivision(d, w.pattern, w.embedding).ok);
    CHECK(verify_subdivision(d, directed_wheel_plus(t), w.plus).ok);
    CHECK(verify_subdivision(d, directed_wheel_w2(t), w.w2).ok);
    CHECK((w.embedding.tag == "W1" || w.embedding.tag == "W2"));
    if (t >= 3) {
      const auto c = find_two_block_wheel(d, t - 1, 1);
      CHECK(verify_subdivision(d, c.pattern, c.embedding).ok);
    }
  }
}
