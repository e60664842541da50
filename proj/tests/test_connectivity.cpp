#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cominor/connectivity.hpp"
#include "cominor/flow.hpp"
#include "cominor/generators.hpp"
#include "cominor/suite.hpp"

using namespace cominor;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

bool internally_disjoint(const std::vector<Path>& paths) {
  std::set<int> seen;
  for (const auto& p : paths)
    for (std::size_t i = 1; i < p.size(); ++i)
      if (!seen.insert(p[i]).second) return false;
  return true;
}

}  // namespace

TEST_CASE("max flow and min-cost flow on a small network") {
  FlowNetwork f(4);
  f.add_arc(0, 1, 1, 1);
  f.add_arc(0, 2, 1, 5);
  f.add_arc(1, 3, 1, 1);
  f.add_arc(2, 3, 1, 1);
  f.add_arc(1, 2, 1, 0);
  CHECK(f.min_cost_flow(0, 3, 1) == 1);
  CHECK(f.total_cost() == 2);
  FlowNetwork g(4);
  g.add_arc(0, 1, 2);
  g.add_arc(0, 2, 2);
  g.add_arc(1, 3, 1);
  g.add_arc(2, 3, 3);
  CHECK(g.max_flow(0, 3) == 3);
}

TEST_CASE("fan in a wheel reaches every rim vertex") {
  Graph w = add_apex(Graph::cycle(5));
  const std::vector<int> rim{0, 1, 2, 3, 4};
  const auto r = max_fan(w, 5, rim);
  CHECK(r.fan.paths.size() == 5);
  CHECK_FALSE(r.separation.has_value());
}

TEST_CASE("property: fan paths are valid and the separation certifies optimality") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 7;
    const Graph g = random_graph(n, 0.45, rng);
    const int v = static_cast<int>(rng() % n);
    std::vector<int> s;
    for (int w = 0; w < n; ++w)
      if (w != v && rng() % 2) s.push_back(w);
    if (s.empty()) continue;
    const auto r = max_fan(g, v, s);
    CHECK(internally_disjoint(r.fan.paths));
    for (const auto& p : r.fan.paths) {
      REQUIRE(!p.empty());
      CHECK(p.front() == v);
      CHECK(std::find(s.begin(), s.end(), p.back()) != s.end());
      for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
    }
    CHECK(static_cast<int>(r.fan.paths.size()) == brute_force_fan_separator(g, v, s));
    if (r.separation) {
      CHECK(is_separation(g, *r.separation));
      CHECK(r.separation->order() == static_cast<int>(r.fan.paths.size()));
    }
  }
}

TEST_CASE("property: directed linkage paths start at X and are disjoint") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = gen_min_outdegree_digraph(9, 3, rng());
    const std::vector<int> x{0, 1}, y{7, 8};
    const auto r = disjoint_linkage(d, x, y);
    if (r.complete()) {
      REQUIRE(r.paths.size() == 2);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(r.paths[i].front() == x[i]);
        for (std::size_t j = 0; j + 1 < r.paths[i].size(); ++j)
          CHECK(d.has_arc(r.paths[i][j], r.paths[i][j + 1]));
      }
      std::set<int> all(r.paths[0].begin(), r.paths[0].end());
      for (int v : r.paths[1]) CHECK_FALSE(all.count(v));
    } else {
      CHECK(is_separation(d, *r.separation));
      CHECK(r.separation->order() < 2);
    }
  }
}

TEST_CASE("property: bounded-order separations keep S on the A side within the order bound") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = gen_min_outdegree_digraph(8, 2, rng());
    const std::vector<int> s{0, 1, 2};
    const auto sep = bounded_order_separation(d, s, 2);
    if (!sep) continue;
    CHECK(is_separation(d, *sep));
    CHECK(sep->order() <= 2);
    CHECK(sep->nontrivial());
    for (int v : s) CHECK(std::binary_search(sep->a.begin(), sep->a.end(), v));
  }
}

TEST_CASE("well-connectedness of a clique and a path") {
  const std::vector<int> ends{0, 4};
  CHECK(is_well_connected(Graph::complete(5), ends).well_connected);
  const std::vector<int> s{0, 2, 4};
  Graph star(5);
  star.add_edge(0, 1);
  star.add_edge(1, 2);
  star.add_edge(1, 3);
  star.add_edge(1, 4);
  const auto r = is_well_connected(star, s);
  CHECK_FALSE(r.well_connected);
}

TEST_CASE("in-boundary of a directed cycle segment") {
  const Digraph c = Digraph::directed_cycle(5);
  const std::vector<int> s{1, 2, 3};
  CHECK(in_boundary(c, s) == std::vector<int>{1});
}
