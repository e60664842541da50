#include "cominor/outerplanar.hpp"

#include <algorithm>
#include <map>

namespace cominor {

namespace {

std::vector<int> bfs_distances(const Graph& g, int v) {
  std::vector<int> dist(g.capacity(), -1);
  std::vector<int> queue{v};
  dist[v] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : g.neighbors(queue[i]))
      if (dist[w] < 0) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
  return dist;
}

}  // namespace

int eccentricity(const Graph& g, int v) {
  const auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

std::optional<TriangulationStructure> recognize_maximal_outerplanar(const Graph& h) {
  const int n = h.vertex_count();
  TriangulationStructure ts;
  ts.host = h;
  if (n <= 2) {
    if (n == 2 && h.edge_count() != 1) return std::nullopt;
    return ts;
  }
  if (h.edge_count() != static_cast<std::size_t>(2 * n - 3) || !is_connected(h))
    return std::nullopt;

  Graph work = h;
  while (work.vertex_count() > 3) {
    int ear = -1;
    for (int v : work.vertices())
      if (work.degree(v) == 2 && work.has_edge(work.neighbors(v)[0], work.neighbors(v)[1])) {
        ear = v;
        break;
      }
    if (ear < 0) return std::nullopt;
    Triangle t{ear, work.neighbors(ear)[0], work.neighbors(ear)[1]};
    std::sort(t.begin(), t.end());
    ts.triangles.push_back(t);
    work.remove_vertex(ear);
  }
  const auto rest = work.vertices();
  if (work.edge_count() != 3) return std::nullopt;
  ts.triangles.push_back({rest[0], rest[1], rest[2]});
  std::sort(ts.triangles.begin(), ts.triangles.end());

  std::map<Edge, std::vector<int>> faces_of;
  for (int k = 0; k < static_cast<int>(ts.triangles.size()); ++k) {
    const auto& t = ts.triangles[k];
    for (Edge e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) faces_of[e].push_back(k);
  }
  ts.dual = Graph(static_cast<int>(ts.triangles.size()));
  Graph boundary(h.capacity());
  for (int v = 0; v < h.capacity(); ++v)
    if (!h.is_live(v)) boundary.remove_vertex(v);
  for (const auto& [e, fs] : faces_of) {
    if (fs.size() > 2) return std::nullopt;
    if (fs.size() == 2) {
      ts.diagonals.push_back(e);
      ts.dual.add_edge(fs[0], fs[1]);
    } else {
      boundary.add_edge(e.u, e.v);
    }
  }
  for (int v : boundary.vertices())
    if (boundary.degree(v) != 2) return std::nullopt;
  const int start = boundary.vertices().front();
  int prev = start;
  int cur = boundary.neighbors(start)[0];
  ts.outer_cycle.push_back(start);
  while (cur != start) {
    ts.outer_cycle.push_back(cur);
    const auto nb = boundary.neighbors(cur);
    const int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(ts.outer_cycle.size()) != n) return std::nullopt;
  return ts;
}

TreeShape classify_tree(const Graph& tree) {
  TreeShape s;
  s.tree = tree;
  const auto nodes = tree.vertices();
  if (nodes.empty()) return s;
  s.radius = tree.capacity();
  for (int v : nodes) {
    const int e = eccentricity(tree, v);
    if (e < s.radius) {
      s.radius = e;
      s.centers.clear();
    }
    if (e == s.radius) s.centers.push_back(v);
  }
  const bool is_tree = is_connected(tree) && tree.edge_count() + 1 == nodes.size();
  if (!is_tree) return s;
  s.path = std::all_of(nodes.begin(), nodes.end(), [&](int v) { return tree.degree(v) <= 2; });

  // Every vertex closer than h to the root has `inner` children plus parent.
  auto complete_from = [&](int root, int root_degree) {
    const auto dist = bfs_distances(tree, root);
    const int h = *std::max_element(dist.begin(), dist.end());
    for (int v : nodes) {
      const int want = dist[v] == h ? (h == 0 ? 0 : 1) : (v == root ? root_degree : 3);
      if (tree.degree(v) != want) return -1;
    }
    return h;
  };
  if (s.centers.size() == 1) {
    const int h = complete_from(s.centers[0], 3);
    if (h >= 0) {
      s.complete_cubic = true;
      s.height = h;
    }
  }
  if (!s.complete_cubic) {
    for (int v : nodes) {
      if (tree.degree(v) != 2) continue;
      const int h = complete_from(v, 2);
      if (h >= 1) {
        s.complete_binary = true;
        s.height = h;
        s.binary_root = v;
        break;
      }
    }
  }
  return s;
}

TreeShape weak_dual_tree(const TriangulationStructure& ts) { return classify_tree(ts.dual); }

}  // namespace cominor
