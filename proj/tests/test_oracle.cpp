#include <doctest.h>

#include <algorithm>
#include <random>

#include "cominor/embeddings.hpp"
#include "cominor/generators.hpp"
#include "cominor/oracle.hpp"

using namespace cominor;

TEST_CASE("planar anchors") {
  const Graph ico = gen_icosahedron();
  CHECK(oracle_minor(ico, Graph::complete(5)).verdict == Verdict::kNo);
  CHECK(oracle_minor(ico, gen_k23_plus()).verdict == Verdict::kNo);
  const auto k4 = oracle_minor(ico, Graph::complete(4));
  REQUIRE(k4.verdict == Verdict::kYes);
  CHECK(verify_minor(ico, Graph::complete(4), *k4.certificate).ok);
}

TEST_CASE("Petersen graph has K5 as a minor but not as a subdivision") {
  const Graph p = gen_petersen();
  const auto m = oracle_minor(p, Graph::complete(5));
  REQUIRE(m.verdict == Verdict::kYes);
  CHECK(verify_minor(p, Graph::complete(5), *m.certificate).ok);
  CHECK(oracle_subdivision(p, Graph::complete(5)).verdict == Verdict::kNo);
}

TEST_CASE("tightness: K_t excludes patterns on t+1 vertices") {
  for (int t = 2; t <= 6; ++t) {
    CHECK(oracle_minor(Graph::complete(t), Graph::path(t + 1)).verdict == Verdict::kNo);
    CHECK(oracle_minor(Graph::complete(t), gen_snake(t + 1)).verdict == Verdict::kNo);
  }
}

TEST_CASE("budget exhaustion is never reported as no") {
  const auto r = oracle_minor(gen_icosahedron(), Graph::complete(5), {100, 60000});
  CHECK(r.verdict == Verdict::kBudgetExceeded);
  CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("butterfly minors: contraction legality matters") {
  // A directed 4-cycle contracts to a directed triangle.
  const auto c = oracle_butterfly(Digraph::directed_cycle(4), Digraph::directed_cycle(3));
  REQUIRE(c.verdict == Verdict::kYes);
  CHECK(verify_butterfly(Digraph::directed_cycle(4), Digraph::directed_cycle(3), *c.certificate).ok);
  CHECK(oracle_butterfly(Digraph::directed_cycle(3), Digraph::directed_cycle(4)).verdict == Verdict::kNo);
  // Two sources feeding two sinks through one vertex: contracting it would need a non-butterfly arc.
  Digraph x(5);
  x.add_arc(0, 2);
  x.add_arc(1, 2);
  x.add_arc(2, 3);
  x.add_arc(2, 4);
  Digraph k22(4);
  k22.add_arc(0, 2);
  k22.add_arc(0, 3);
  k22.add_arc(1, 2);
  k22.add_arc(1, 3);
  for (auto mode : {ButterflyMode::kBranchSet, ButterflyMode::kOperationSequence})
    CHECK(oracle_butterfly(x, k22, {}, mode).verdict == Verdict::kNo);
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    Digraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng() % 3 == 0) d.add_arc(u, v);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph e(n);
    for (const Edge& a : d.arcs()) e.add_arc(perm[a.u], perm[a.v]);
    CHECK(canonical_code(d) == canonical_code(e));
  }
  CHECK(canonical_code(Digraph::directed_cycle(3)) != canonical_code(Digraph::biorientation(Graph::path(3))));
}

TEST_CASE("property: the two butterfly oracles agree on random small pairs") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const int hn = 2 + trial % 4, pn = 1 + trial % 3;
    Digraph h(hn), p(pn);
    for (int u = 0; u < hn; ++u)
      for (int v = 0; v < hn; ++v)
        if (u != v && rng() % 2) h.add_arc(u, v);
    for (int u = 0; u < pn; ++u)
      for (int v = 0; v < pn; ++v)
        if (u != v && rng() % 3 == 0) p.add_arc(u, v);
    const auto a = oracle_butterfly(h, p, {}, ButterflyMode::kOperationSequence);
    const auto b = oracle_butterfly(h, p, {}, ButterflyMode::kBranchSet);
    CHECK(a.verdict == b.verdict);
    if (b.certificate) CHECK(verify_butterfly(h, p, *b.certificate).ok);
  }
}

TEST_CASE("operation-sequence mode is limited to small hosts") {
  try {
    (void)oracle_butterfly(Digraph::directed_cycle(9), Digraph::directed_cycle(3), {},
                           ButterflyMode::kOperationSequence);
    FAIL("expected kDomain");
  } catch (const GraphError& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}
