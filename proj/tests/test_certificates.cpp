#include <doctest.h>

#include <random>

#include "cominor/certificates.hpp"
#include "cominor/digraph_finder.hpp"
#include "cominor/generators.hpp"
#include "cominor/io.hpp"
#include "cominor/minor_finder.hpp"
#include "cominor/schemes.hpp"

using namespace cominor;

TEST_CASE("minor certificates round-trip through JSON") {
  const Graph g = gen_min_degree_graph(12, 6, 2);
  const auto res = find_apex_minor(g, *make_snake_scheme(gen_snake(6), 0, 1));
  const Certificate c = make_certificate(g, res.pattern, res.embedding);
  CHECK(c.kind() == "minor");
  CHECK(c.host_hash == host_hash(g));
  const Certificate back = certificate_from_json(to_json(c));
  CHECK(to_json(back) == to_json(c));
  CHECK(check_certificate(back, g).ok);
}

TEST_CASE("certificates are bound to their host") {
  const Graph g = gen_min_degree_graph(10, 3, 5);
  const auto res = find_apex_minor(g, *make_tree_scheme(Graph::path(3), 0));
  const Certificate c = make_certificate(g, res.pattern, res.embedding);
  CHECK_FALSE(check_certificate(c, gen_min_degree_graph(10, 3, 6)).ok);
  CHECK_FALSE(check_certificate(c, Digraph::biorientation(g)).ok);
}

TEST_CASE("butterfly and subdivision certificates round-trip") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const int t = 2 + trial % 3;
    const Digraph d = gen_min_outdegree_digraph(10, t, rng());
    const auto b = find_apex_inarb_butterfly(d, gen_inarborescence(t, rng()));
    const Certificate cb = certificate_from_json(to_json(make_certificate(d, b.pattern, b.embedding)));
    CHECK(cb.kind() == "butterfly");
    CHECK(check_certificate(cb, d).ok);
    const auto w = find_wheel_subdivision(d, t);
    const Certificate cw = certificate_from_json(to_json(make_certificate(d, w.pattern, w.embedding)));
    CHECK(cw.kind() == "subdivision");
    CHECK(check_certificate(cw, d).ok);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Graph g = gen_min_degree_graph(9, 3, 9);
  const auto res = find_apex_minor(g, *make_tree_scheme(Graph::path(3), 0));
  MinorEmbedding mu = res.embedding;
  mu.branch_sets[0].push_back(mu.branch_sets[1].front());
  CHECK_FALSE(check_certificate(make_certificate(g, res.pattern, mu), g).ok);
}

TEST_CASE("malformed JSON is a parse error") {
  for (const char* bad : {"", "{", "{\"pattern\": 3}", "[1,2]"}) {
    try {
      (void)certificate_from_json(bad);
      FAIL("accepted: " << bad);
    } catch (const GraphError& e) {
      CHECK(e.kind() == ErrorKind::kParse);
    }
  }
}
