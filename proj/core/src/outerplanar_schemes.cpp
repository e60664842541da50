#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "cominor/generators.hpp"
#include "cominor/outerplanar.hpp"
#include "cominor/schemes.hpp"

namespace cominor {

namespace {

using Face = std::array<int, 3>;  // (p, q, c): c was placed across pq

int third_vertex(const Graph& g, int a, int b, int not_c) {
  for (int w : g.neighbors(a))
    if (w != not_c && w != b && g.has_edge(b, w)) return w;
  return -1;
}

// Extends `order` by repeatedly placing the far vertex of a face across an
// edge of an already placed face.
Ordering face_bfs(const Graph& g, Ordering order, std::vector<Face> faces) {
  std::vector<char> placed(g.capacity(), 0);
  for (int v : order) placed[v] = 1;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const Face f = faces[k];
    const std::array<Face, 3> sides{Face{f[0], f[1], f[2]}, Face{f[1], f[2], f[0]},
                                    Face{f[0], f[2], f[1]}};
    for (const Face& e : sides) {
      const int c = third_vertex(g, e[0], e[1], e[2]);
      if (c >= 0 && !placed[c]) {
        placed[c] = 1;
        order.push_back(c);
        faces.push_back({e[0], e[1], c});
      }
    }
  }
  return order;
}

std::vector<Face> triangles_of(const Graph& k) {
  std::vector<Face> out;
  for (int u : k.vertices())
    for (int v : k.neighbors(u))
      if (v > u)
        for (int w : k.neighbors(v))
          if (w > v && k.has_edge(u, w)) out.push_back({u, v, w});
  return out;
}

bool shares_edge(const Face& a, const Face& b) {
  int common = 0;
  for (int x : a) common += std::count(b.begin(), b.end(), x);
  return common == 2;
}

int face_eccentricity(const std::vector<Face>& faces, int start) {
  std::vector<int> dist(faces.size(), -1);
  std::vector<int> queue{start};
  dist[start] = 0;
  int far = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int f = queue[q];
    far = std::max(far, dist[f]);
    for (int g = 0; g < static_cast<int>(faces.size()); ++g)
      if (dist[g] < 0 && shares_edge(faces[f], faces[g])) {
        dist[g] = dist[f] + 1;
        queue.push_back(g);
      }
  }
  return far;
}

// Ω = all recursive orderings starting with the central face (x,y,z), rooted
// at (x) or, for the binary shape, at (x,y).
class OuterplanarScheme final : public OrderingScheme {
 public:
  OuterplanarScheme(Graph host, Face center, int height, bool binary)
      : OrderingScheme(std::move(host), binary ? Root{center[0], center[1]} : Root{center[0]}),
        center_(center), height_(height), binary_(binary) {}

  Ordering initial() const override {
    return face_bfs(host(), {center_[0], center_[1], center_[2]}, {center_});
  }
  std::string name() const override { return binary_ ? "binary" : "universal"; }

 protected:
  Replacement replace_step(const Ordering& w, int s, int i, int j) const override {
    const Graph k = contracted_prefix(host(), w, s, i, j);
    const int x = center_[0], y = center_[1], z = center_[2];
    const int xk = merged_label(x, w[i], w[j]);
    const int yk = binary_ ? merged_label(y, w[i], w[j]) : -1;
    const auto kv = k.vertices();
    if (kv.size() == 2) {
      const int other = kv[0] == xk ? kv[1] : kv[0];
      return {initial(), {{x, xk}, {y, other}}};
    }
    const auto faces = triangles_of(k);
    int best = -1, best_ecc = 0;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      const auto& fc = faces[f];
      const bool has_x = std::count(fc.begin(), fc.end(), xk) > 0;
      const bool has_y = !binary_ || std::count(fc.begin(), fc.end(), yk) > 0;
      if (!has_x || !has_y) continue;
      const int ecc = face_eccentricity(faces, f);
      if (best < 0 || ecc < best_ecc) {
        best = f;
        best_ecc = ecc;
      }
    }
    if (best < 0 || best_ecc > height_)
      fail(ErrorKind::kInvariantViolation, name() + ": no shallow face at the root");
    std::map<int, int> image;  // K vertex -> H vertex
    Face root_face = faces[best];
    std::vector<int> rest;
    for (int v : root_face)
      if (v != xk && v != yk) rest.push_back(v);
    image[xk] = x;
    if (binary_) {
      image[yk] = y;
      image[rest[0]] = z;
    } else {
      image[rest[0]] = y;
      image[rest[1]] = z;
    }
    std::vector<char> used(host().capacity(), 0);
    used[x] = used[y] = used[z] = 1;
    Ordering omega{x, y, z};
    std::vector<Face> kfaces{{xk, binary_ ? yk : rest[0], binary_ ? rest[0] : rest[1]}};
    std::vector<Face> hfaces{{x, y, z}};
    for (std::size_t q = 0; q < kfaces.size(); ++q) {
      const Face f = kfaces[q];
      const std::array<Face, 3> sides{Face{f[0], f[1], f[2]}, Face{f[1], f[2], f[0]},
                                      Face{f[0], f[2], f[1]}};
      for (const Face& e : sides) {
        const int c = third_vertex(k, e[0], e[1], e[2]);
        if (c < 0 || image.count(c)) continue;
        const int ch = third_vertex(host(), image[e[0]], image[e[1]], image[e[2]]);
        if (ch < 0 || used[ch])
          fail(ErrorKind::kInvariantViolation, name() + ": contracted graph does not embed");
        used[ch] = 1;
        image[c] = ch;
        omega.push_back(ch);
        kfaces.push_back({e[0], e[1], c});
        hfaces.push_back({image[e[0]], image[e[1]], ch});
      }
    }
    if (static_cast<int>(image.size()) != s - 1)
      fail(ErrorKind::kInvariantViolation, name() + ": contracted graph is not a triangulation");
    Replacement r{face_bfs(host(), std::move(omega), std::move(hfaces)), {}};
    for (auto [kvx, hv] : image) r.phi.emplace_back(hv, kvx);
    return r;
  }

 private:
  static int merged_label(int v, int a, int b) { return (v == a || v == b) ? std::min(a, b) : v; }

  Face center_;
  int height_;
  bool binary_;
};

Graph triangle_in(int capacity, int a, int b, int c) {
  Graph g(capacity);
  for (int v = 0; v < capacity; ++v)
    if (v != a && v != b && v != c) g.remove_vertex(v);
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(a, c);
  return g;
}

int snake_peel_vertex(const Graph& h, int u, int v) {
  for (int z : h.vertices())
    if (z != u && z != v && h.degree(z) == 2) return z;
  fail(ErrorKind::kHypothesis, "snake: no degree-2 vertex outside the root");
}

SchemePtr snake_recursive(const Graph& h, int u, int v) {
  if (h.vertex_count() == 3) {
    int c = -1;
    for (int w : h.vertices())
      if (w != u && w != v) c = w;
    return make_single_ordering_scheme(h, {u, v}, {u, v, c}, "triangle");
  }
  const int z = snake_peel_vertex(h, u, v);
  const int a = h.neighbors(z)[0], b = h.neighbors(z)[1];
  Graph rest = h;
  rest.remove_vertex(z);
  auto base = snake_recursive(rest, u, v);
  auto tri = make_single_ordering_scheme(triangle_in(h.capacity(), a, b, z), {a, b}, {a, b, z},
                                         "triangle");
  return glue_schemes(std::move(base), std::move(tri), 3);
}

void require_snake(const Graph& h, int u, int v) {
  const auto ts = recognize_maximal_outerplanar(h);
  if (!ts || h.vertex_count() < 3) fail(ErrorKind::kHypothesis, "snake: not maximal outerplanar");
  if (!weak_dual_tree(*ts).path) fail(ErrorKind::kHypothesis, "snake: weak dual is not a path");
  if (!h.has_edge(u, v) || (h.degree(u) != 2 && h.degree(v) != 2))
    fail(ErrorKind::kHypothesis, "snake: root must be an edge with an end of degree 2");
}

}  // namespace

SchemePtr make_universal_scheme(int h) {
  Graph g = gen_universal(h);
  const int side = 1 << h;
  return std::make_shared<OuterplanarScheme>(std::move(g), Face{0, side, 2 * side}, h, false);
}

SchemePtr make_binary_scheme(int h) {
  Graph g = gen_binary(h);
  const int side = 1 << h;
  return std::make_shared<OuterplanarScheme>(std::move(g), Face{0, 1, side + 1}, h, true);
}

SchemePtr make_snake_scheme(const Graph& h, int u, int v) {
  require_snake(h, u, v);
  return snake_recursive(h, u, v);
}

Edge contractible_edge_for_snake(const Graph& h, int u, int v) {
  require_snake(h, u, v);
  const int z = snake_peel_vertex(h, u, v);
  return undirected(z, h.neighbors(z)[0]);
}

namespace {

// Vertex sets of the blocks of a connected graph, each sorted, ordered by
// first discovery in a DFS from the smallest vertex.
std::vector<std::vector<int>> blocks_of(const Graph& g) {
  const int n = g.capacity();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.push_back({v, w});
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> block;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.push_back(e.u);
            block.push_back(e.v);
            if (e.u == v && e.v == w) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  const auto vs = g.vertices();
  if (!vs.empty()) dfs(vs.front(), -1);
  return blocks;
}

std::size_t induced_edges(const Graph& g, const std::vector<int>& vs) {
  std::size_t m = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) m += g.has_edge(vs[a], vs[b]);
  return m;
}

SchemePtr block_scheme(const Graph& g, const std::vector<int>& block, int b) {
  if (block.size() == 2) {
    const int w = block[0] == b ? block[1] : block[0];
    Graph e(g.capacity());
    for (int v = 0; v < g.capacity(); ++v)
      if (v != b && v != w) e.remove_vertex(v);
    e.add_edge(b, w);
    return make_tree_scheme(e, b);
  }
  Graph fan = g.induced(block);
  int v = -1;
  for (int w : fan.neighbors(b)) {
    v = w;
    break;
  }
  for (int w : block)
    if (w != v && !fan.has_edge(v, w)) fan.add_edge(v, w);
  return restrict_root(make_snake_scheme(fan, b, v), {b});
}

}  // namespace

SchemePtr make_cactus_scheme(const Graph& g, int r) {
  if (!g.is_live(r)) fail(ErrorKind::kDomain, "cactus: root not in graph");
  if (!is_connected(g)) fail(ErrorKind::kDomain, "cactus: not connected");
  const auto blocks = blocks_of(g);
  for (const auto& blk : blocks) {
    const std::size_t m = induced_edges(g, blk);
    const bool edge = blk.size() == 2 && m == 1;
    const bool cyc = blk.size() >= 3 && m == blk.size();
    if (!edge && !cyc) fail(ErrorKind::kDomain, "cactus: a block is neither an edge nor a cycle");
  }
  if (g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count())) return make_tree_scheme(g, r);

  Graph single(g.capacity());
  for (int v = 0; v < g.capacity(); ++v)
    if (v != r) single.remove_vertex(v);
  SchemePtr current = make_single_ordering_scheme(single, {r}, {r}, "vertex");

  std::vector<std::vector<int>> at(g.capacity());
  for (int k = 0; k < static_cast<int>(blocks.size()); ++k)
    for (int v : blocks[k]) at[v].push_back(k);
  std::vector<char> done(blocks.size(), 0), seen(g.capacity(), 0);
  std::vector<int> queue{r};
  seen[r] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int b = queue[q];
    std::vector<int> mine;
    for (int k : at[b])
      if (!done[k]) mine.push_back(k);
    std::sort(mine.begin(), mine.end(), [&](int x, int y) { return blocks[x] < blocks[y]; });
    for (int k : mine) {
      done[k] = 1;
      current = glue_schemes(current, block_scheme(g, blocks[k], b), 2);
      for (int v : blocks[k])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }
  return current;
}

}  // namespace cominor
