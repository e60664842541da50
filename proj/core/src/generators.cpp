#include "cominor/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace cominor {

namespace {

// Builds a triangulation from a boundary sequence of temporary ids and
// relabels each vertex by its boundary position.
struct Builder {
  int next_id = 0;
  std::vector<Edge> edges;
  std::vector<int> boundary;

  int fresh() { return next_id++; }

  // Appends the vertices strictly between p and q after growing d layers.
  void grow(int p, int q, int d) {
    if (d == 0) return;
    const int c = fresh();
    edges.push_back({p, c});
    edges.push_back({c, q});
    grow(p, c, d - 1);
    boundary.push_back(c);
    grow(c, q, d - 1);
  }

  Graph finish() const {
    std::vector<int> pos(next_id);
    for (int k = 0; k < static_cast<int>(boundary.size()); ++k) pos[boundary[k]] = k;
    Graph g(next_id);
    for (Edge e : edges) g.add_edge(pos[e.u], pos[e.v]);
    return g;
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::kDomain, what);
}

int pick(std::mt19937_64& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

}  // namespace

Graph gen_universal(int h) {
  require(h >= 0 && h <= 16, "universal: height out of range");
  Builder b;
  const int x = b.fresh(), y = b.fresh(), z = b.fresh();
  b.edges = {{x, y}, {y, z}, {z, x}};
  b.boundary.push_back(x);
  b.grow(x, y, h);
  b.boundary.push_back(y);
  b.grow(y, z, h);
  b.boundary.push_back(z);
  b.grow(z, x, h);
  return b.finish();
}

Graph gen_binary(int h) {
  require(h >= 1 && h <= 16, "binary: height out of range");
  Builder b;
  const int x = b.fresh(), y = b.fresh(), z = b.fresh();
  b.edges = {{x, y}, {y, z}, {z, x}};
  b.boundary = {x, y};
  b.grow(y, z, h);
  b.boundary.push_back(z);
  b.grow(z, x, h);
  return b.finish();
}

Graph gen_snake(int n) {
  require(n >= 3, "snake: need at least 3 vertices");
  std::vector<int> order;
  for (int i = 0; i < n; i += 2) order.push_back(i);
  for (int i = (n % 2 == 0 ? n - 1 : n - 2); i >= 1; i -= 2) order.push_back(i);
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(pos[i], pos[i + 1]);
  for (int i = 0; i + 2 < n; ++i) g.add_edge(pos[i], pos[i + 2]);
  return g;
}

Graph gen_fan(int n) {
  require(n >= 1, "fan: need at least 1 vertex");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    if (i + 1 < n) g.add_edge(i, i + 1);
  }
  return g;
}

Graph gen_min_degree_graph(int n, int t, std::uint64_t seed) {
  require(n >= 1 && t >= 0 && t < n, "min_degree_graph: need 0 <= t < n");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int k = 0; k < n && n > 1; ++k) {
    const int u = pick(rng, n), v = pick(rng, n);
    if (u != v) g.add_edge(u, v);
  }
  long long attempts = 0;
  const long long cap = static_cast<long long>(n) * n;
  for (int v = 0; v < n; ++v) {
    while (g.degree(v) < t) {
      require(++attempts <= cap, "min_degree_graph: repair budget exhausted");
      std::vector<int> options;
      for (int w = 0; w < n; ++w)
        if (w != v && !g.has_edge(v, w)) options.push_back(w);
      g.add_edge(v, options[pick(rng, static_cast<int>(options.size()))]);
    }
  }
  return g;
}

Digraph gen_min_outdegree_digraph(int n, int t, std::uint64_t seed) {
  require(n >= 1 && t >= 0 && t < n, "min_outdegree_digraph: need 0 <= t < n");
  std::mt19937_64 rng(seed);
  Digraph d(n);
  for (int k = 0; k < n && n > 1; ++k) {
    const int u = pick(rng, n), v = pick(rng, n);
    if (u != v) d.add_arc(u, v);
  }
  long long attempts = 0;
  const long long cap = static_cast<long long>(n) * n;
  for (int v = 0; v < n; ++v) {
    while (d.out_degree(v) < t) {
      require(++attempts <= cap, "min_outdegree_digraph: repair budget exhausted");
      std::vector<int> options;
      for (int w = 0; w < n; ++w)
        if (w != v && !d.has_arc(v, w)) options.push_back(w);
      d.add_arc(v, options[pick(rng, static_cast<int>(options.size()))]);
    }
  }
  return d;
}

Graph gen_cactus(int n, std::uint64_t seed) {
  require(n >= 1, "cactus: need at least 1 vertex");
  std::mt19937_64 rng(seed);
  Graph g(n);
  int count = 1;
  while (count < n) {
    const int a = pick(rng, count);
    const int remaining = n - count;
    if (remaining < 2 || pick(rng, 2) == 0) {
      g.add_edge(a, count++);
      continue;
    }
    const int len = 3 + pick(rng, std::min(4, remaining - 1));
    int prev = a;
    for (int k = 1; k < len; ++k) {
      g.add_edge(prev, count);
      prev = count++;
    }
    g.add_edge(prev, a);
  }
  return g;
}

Digraph gen_subcubic_inarborescence(int n, std::uint64_t seed) {
  require(n >= 1, "subcubic_inarborescence: need at least 1 vertex");
  std::mt19937_64 rng(seed);
  Digraph d(n);
  for (int v = 1; v < n; ++v) {
    std::vector<int> options;
    for (int p = 0; p < v; ++p)
      if (d.in_degree(p) < (p == 0 ? 3 : 2)) options.push_back(p);
    d.add_arc(v, options[pick(rng, static_cast<int>(options.size()))]);
  }
  return d;
}

Digraph gen_inarborescence(int n, std::uint64_t seed) {
  require(n >= 1, "inarborescence: need at least 1 vertex");
  std::mt19937_64 rng(seed);
  Digraph d(n);
  for (int v = 1; v < n; ++v) d.add_arc(v, pick(rng, v));
  return d;
}

Graph gen_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree: need at least 1 vertex");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, pick(rng, v));
  return g;
}

Graph gen_icosahedron() {
  Graph g(12);
  for (int i = 1; i <= 5; ++i) {
    const int next = i % 5 + 1;
    g.add_edge(0, i);
    g.add_edge(i, next);
    g.add_edge(i, 5 + i);
    g.add_edge(i, 5 + next);
    g.add_edge(5 + i, 5 + next);
    g.add_edge(11, 5 + i);
  }
  return g;
}

Graph gen_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph gen_k23_plus() {
  Graph g(6);
  for (int a : {0, 1})
    for (int b : {2, 3, 4}) g.add_edge(a, b);
  for (int v = 0; v < 5; ++v) g.add_edge(5, v);
  return g;
}

}  // namespace cominor
