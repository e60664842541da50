#include "cominor/iso.hpp"

#include <algorithm>
#include <functional>

namespace cominor {

namespace {

// Shared search over an abstract adjacency oracle. `induced` demands that
// non-adjacent pairs map to non-adjacent pairs (isomorphism mode).
template <class Adj, class Deg>
class Matcher {
 public:
  Matcher(std::vector<int> a_vertices, std::vector<int> b_vertices, int a_cap, int b_cap,
          Adj adj_a, Adj adj_b, Deg fits, bool induced)
      : a_vs_(std::move(a_vertices)),
        b_vs_(std::move(b_vertices)),
        adj_a_(adj_a),
        adj_b_(adj_b),
        fits_(fits),
        induced_(induced),
        map_(a_cap, -1),
        used_(b_cap, 0) {}

  std::optional<VertexMap> run(std::span<const std::pair<int, int>> fixed) {
    for (auto [x, y] : fixed) {
      if (x < 0 || x >= static_cast<int>(map_.size()) || y < 0 ||
          y >= static_cast<int>(used_.size()))
        return std::nullopt;
      if (map_[x] != -1 && map_[x] != y) return std::nullopt;
      if (map_[x] == -1 && used_[y]) return std::nullopt;
      if (!fits_(x, y)) return std::nullopt;
      map_[x] = y;
      used_[y] = 1;
    }
    for (auto [x, y] : fixed)
      for (auto [x2, y2] : fixed)
        if (x != x2 && !consistent_pair(x, y, x2, y2)) return std::nullopt;
    order_.clear();
    for (int v : a_vs_)
      if (map_[v] == -1) order_.push_back(v);
    // Most constrained first: prefer vertices adjacent to already placed ones.
    std::vector<char> placed(map_.size(), 0);
    for (auto [x, y] : fixed) placed[x] = 1;
    std::vector<int> sorted;
    while (!order_.empty()) {
      auto best = order_.begin();
      int best_score = -1;
      for (auto it = order_.begin(); it != order_.end(); ++it) {
        int score = 0;
        for (int p : a_vs_)
          if (placed[p] && (adj_a_(*it, p) || adj_a_(p, *it))) ++score;
        if (score > best_score) {
          best_score = score;
          best = it;
        }
      }
      placed[*best] = 1;
      sorted.push_back(*best);
      order_.erase(best);
    }
    order_ = std::move(sorted);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent_pair(int x, int y, int x2, int y2) const {
    const bool fwd_a = adj_a_(x, x2), fwd_b = adj_b_(y, y2);
    const bool back_a = adj_a_(x2, x), back_b = adj_b_(y2, y);
    if (induced_) return fwd_a == fwd_b && back_a == back_b;
    return (!fwd_a || fwd_b) && (!back_a || back_b);
  }

  bool search(std::size_t k) {
    if (k == order_.size()) return true;
    const int x = order_[k];
    for (int y : b_vs_) {
      if (used_[y] || !fits_(x, y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = consistent_pair(x, y, order_[j], map_[order_[j]]);
      if (ok)
        for (int p : a_vs_)
          if (map_[p] != -1 && std::find(order_.begin(), order_.begin() + k, p) == order_.begin() + k)
            if (!consistent_pair(x, y, p, map_[p])) {
              ok = false;
              break;
            }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (search(k + 1)) return true;
      map_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  std::vector<int> a_vs_, b_vs_, order_;
  Adj adj_a_, adj_b_;
  Deg fits_;
  bool induced_;
  VertexMap map_;
  std::vector<char> used_;
};

template <class Adj, class Deg>
Matcher<Adj, Deg> make_matcher(std::vector<int> av, std::vector<int> bv, int acap, int bcap,
                               Adj aa, Adj ab, Deg fits, bool induced) {
  return Matcher<Adj, Deg>(std::move(av), std::move(bv), acap, bcap, aa, ab, fits, induced);
}

}  // namespace

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b,
                                          std::span<const std::pair<int, int>> fixed) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto da = degree_profile(a).degree, db = degree_profile(b).degree;
  {
    std::vector<int> sa, sb;
    for (int v : a.vertices()) sa.push_back(da[v]);
    for (int v : b.vertices()) sb.push_back(db[v]);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  using AdjFn = std::function<bool(int, int)>;
  AdjFn adj_a = [&a](int x, int y) { return a.has_edge(x, y); };
  AdjFn adj_b = [&b](int x, int y) { return b.has_edge(x, y); };
  auto fits = [&](int x, int y) { return da[x] == db[y]; };
  auto m = make_matcher(a.vertices(), b.vertices(), a.capacity(), b.capacity(), adj_a, adj_b,
                        fits, true);
  return m.run(fixed);
}

std::optional<VertexMap> find_isomorphism(const Digraph& a, const Digraph& b,
                                          std::span<const std::pair<int, int>> fixed) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return std::nullopt;
  using AdjFn = std::function<bool(int, int)>;
  AdjFn adj_a = [&a](int x, int y) { return a.has_arc(x, y); };
  AdjFn adj_b = [&b](int x, int y) { return b.has_arc(x, y); };
  auto fits = [&](int x, int y) {
    return a.out_degree(x) == b.out_degree(y) && a.in_degree(x) == b.in_degree(y);
  };
  auto m = make_matcher(a.vertices(), b.vertices(), a.capacity(), b.capacity(), adj_a, adj_b,
                        fits, true);
  return m.run(fixed);
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }
bool are_isomorphic(const Digraph& a, const Digraph& b) {
  return find_isomorphism(a, b).has_value();
}

std::optional<VertexMap> find_subgraph_embedding(const Graph& pattern, const Graph& host,
                                                 std::span<const std::pair<int, int>> fixed) {
  if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
    return std::nullopt;
  using AdjFn = std::function<bool(int, int)>;
  AdjFn adj_a = [&pattern](int x, int y) { return pattern.has_edge(x, y); };
  AdjFn adj_b = [&host](int x, int y) { return host.has_edge(x, y); };
  auto fits = [&](int x, int y) { return pattern.degree(x) <= host.degree(y); };
  auto m = make_matcher(pattern.vertices(), host.vertices(), pattern.capacity(), host.capacity(),
                        adj_a, adj_b, fits, false);
  return m.run(fixed);
}

std::optional<VertexMap> find_subgraph_embedding(const Digraph& pattern, const Digraph& host,
                                                 std::span<const std::pair<int, int>> fixed) {
  if (pattern.vertex_count() > host.vertex_count() || pattern.arc_count() > host.arc_count())
    return std::nullopt;
  using AdjFn = std::function<bool(int, int)>;
  AdjFn adj_a = [&pattern](int x, int y) { return pattern.has_arc(x, y); };
  AdjFn adj_b = [&host](int x, int y) { return host.has_arc(x, y); };
  auto fits = [&](int x, int y) {
    return pattern.out_degree(x) <= host.out_degree(y) && pattern.in_degree(x) <= host.in_degree(y);
  };
  auto m = make_matcher(pattern.vertices(), host.vertices(), pattern.capacity(), host.capacity(),
                        adj_a, adj_b, fits, false);
  return m.run(fixed);
}

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMap& map) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (static_cast<int>(map.size()) < a.capacity()) return false;
  std::vector<char> hit(b.capacity(), 0);
  for (int v : a.vertices()) {
    const int w = map[v];
    if (!b.is_live(w) || hit[w]) return false;
    hit[w] = 1;
  }
  for (const Edge& e : a.edges())
    if (!b.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

}  // namespace cominor
