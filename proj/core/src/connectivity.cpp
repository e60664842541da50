#include "cominor/connectivity.hpp"

#include <algorithm>
#include <string>

#include "cominor/flow.hpp"

namespace cominor {

std::vector<int> Separation::separator() const {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool Separation::nontrivial() const {
  const auto sep = separator();
  return a.size() > sep.size() && b.size() > sep.size();
}

namespace {

struct Adj {
  int n = 0;
  std::vector<char> live;
  std::vector<std::vector<int>> out;
};

Adj adjacency(const Graph& g) {
  Adj a{g.capacity(), std::vector<char>(g.capacity()), std::vector<std::vector<int>>(g.capacity())};
  for (int v : g.vertices()) {
    a.live[v] = 1;
    a.out[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return a;
}

Adj adjacency(const Digraph& d, bool reverse) {
  Adj a{d.capacity(), std::vector<char>(d.capacity()), std::vector<std::vector<int>>(d.capacity())};
  for (int v : d.vertices()) {
    a.live[v] = 1;
    auto nb = reverse ? d.in_neighbors(v) : d.out_neighbors(v);
    a.out[v].assign(nb.begin(), nb.end());
  }
  return a;
}

enum class Role : char { kPlain, kOrigin, kTerminal, kAnchor };

int in_node(int x) { return 2 * x; }
int out_node(int x) { return 2 * x + 1; }

// Vertex-split network. Terminals end paths; an anchor is a terminal that
// cannot be cut; the origin is entered only as the flow source.
struct SplitNetwork {
  const Adj& adj;
  std::vector<Role> role;
  bool terminals_block;
  FlowNetwork net;
  int super_source;
  int super_sink;

  SplitNetwork(const Adj& a, std::vector<Role> roles, bool block)
      : adj(a), role(std::move(roles)), terminals_block(block), net(2 * a.n + 2),
        super_source(2 * a.n), super_sink(2 * a.n + 1) {
    constexpr int inf = FlowNetwork::kInf;
    for (int x = 0; x < a.n; ++x) {
      if (!a.live[x]) continue;
      switch (role[x]) {
        case Role::kPlain:
          net.add_arc(in_node(x), out_node(x), 1);
          break;
        case Role::kOrigin:
          break;
        case Role::kTerminal:
          net.add_arc(in_node(x), out_node(x), 1);
          net.add_arc(out_node(x), super_sink, 1);
          break;
        case Role::kAnchor:
          net.add_arc(in_node(x), out_node(x), inf);
          net.add_arc(out_node(x), super_sink, inf);
          break;
      }
    }
    for (int u = 0; u < a.n; ++u) {
      if (!a.live[u]) continue;
      if (role[u] == Role::kAnchor) continue;
      if (role[u] == Role::kTerminal && terminals_block) continue;
      for (int w : a.out[u])
        if (role[w] != Role::kOrigin) net.add_arc(out_node(u), in_node(w), inf);
    }
  }

  // Splits the flow into vertex paths starting at `start` (a network node).
  std::vector<Path> decompose(int start, int origin_vertex) const {
    std::vector<std::vector<int>> remaining(net.node_count());
    std::vector<std::vector<int>> units(net.node_count());
    for (int node = 0; node < net.node_count(); ++node)
      for (int id : net.arcs_from(node))
        if ((id & 1) == 0 && net.flow_on(id) > 0) {
          remaining[node].push_back(id);
          units[node].push_back(net.flow_on(id));
        }
    std::vector<Path> paths;
    auto take = [&](int node) -> int {
      for (std::size_t i = 0; i < remaining[node].size(); ++i)
        if (units[node][i] > 0) {
          --units[node][i];
          return net.head(remaining[node][i]);
        }
      return -1;
    };
    while (true) {
      int node = take(start);
      if (node < 0) break;
      Path p;
      if (origin_vertex >= 0) p.push_back(origin_vertex);
      while (node != super_sink && node >= 0) {
        if (node < 2 * adj.n && node % 2 == 0) {
          const int x = node / 2;
          auto it = std::find(p.begin(), p.end(), x);
          if (it != p.end()) p.erase(it + 1, p.end());
          else p.push_back(x);
        }
        node = take(node);
      }
      paths.push_back(std::move(p));
    }
    return paths;
  }

  std::vector<int> live_vertices() const {
    std::vector<int> out;
    for (int x = 0; x < adj.n; ++x)
      if (adj.live[x]) out.push_back(x);
    return out;
  }

  // Separation from a fan or linkage min cut: B−A is the residual side.
  Separation cut(int source_node, const std::vector<char>& is_source) const {
    const auto reach = net.residual_reachable(source_node);
    std::vector<int> side;
    std::vector<int> sep;
    for (int x = 0; x < adj.n; ++x) {
      if (!adj.live[x]) continue;
      const bool rin = reach[in_node(x)] || role[x] == Role::kOrigin;
      const bool rout = reach[out_node(x)];
      const bool terminal_cut = role[x] == Role::kTerminal && rout;
      const bool source_cut = !is_source.empty() && is_source[x] && !reach[in_node(x)];
      if (source_cut || terminal_cut || (rin && !rout)) sep.push_back(x);
      else if (rout) side.push_back(x);
    }
    Separation s;
    std::vector<int> all = live_vertices();
    std::set_difference(all.begin(), all.end(), side.begin(), side.end(),
                        std::back_inserter(s.a));
    std::set_union(side.begin(), side.end(), sep.begin(), sep.end(), std::back_inserter(s.b));
    return s;
  }
};

std::vector<int> sorted_unique(std::span<const int> s) {
  std::vector<int> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_live(const Adj& a, std::span<const int> s, const char* where) {
  for (int x : s)
    if (x < 0 || x >= a.n || !a.live[x])
      fail(ErrorKind::kDomain, std::string(where) + ": vertex " + std::to_string(x) + " not live");
}

FanResult fan_impl(const Adj& a, int v, std::span<const int> s_in) {
  require_live(a, std::span<const int>(&v, 1), "max_fan");
  require_live(a, s_in, "max_fan");
  const auto s = sorted_unique(s_in);
  if (std::binary_search(s.begin(), s.end(), v)) fail(ErrorKind::kDomain, "max_fan: v in S");
  std::vector<Role> roles(a.n, Role::kPlain);
  for (int x : s) roles[x] = Role::kTerminal;
  roles[v] = Role::kOrigin;
  SplitNetwork sn(a, std::move(roles), true);
  const int flow = sn.net.max_flow(out_node(v), sn.super_sink);
  FanResult r;
  r.fan.origin = v;
  r.fan.paths = sn.decompose(out_node(v), v);
  std::sort(r.fan.paths.begin(), r.fan.paths.end(),
            [](const Path& p, const Path& q) { return p.back() < q.back(); });
  if (flow < static_cast<int>(s.size())) r.separation = sn.cut(out_node(v), {});
  return r;
}

LinkageResult linkage_impl(const Adj& a, std::span<const int> x_in, std::span<const int> y_in,
                           bool internal) {
  require_live(a, x_in, "disjoint_linkage");
  require_live(a, y_in, "disjoint_linkage");
  const auto xs = sorted_unique(x_in);
  const auto ys = sorted_unique(y_in);
  std::vector<Role> roles(a.n, Role::kPlain);
  for (int y : ys) roles[y] = Role::kTerminal;
  SplitNetwork sn(a, std::move(roles), internal);
  std::vector<char> is_source(a.n, 0);
  for (int x : xs) {
    is_source[x] = 1;
    sn.net.add_arc(sn.super_source, in_node(x), 1);
  }
  const int flow = sn.net.max_flow(sn.super_source, sn.super_sink);
  LinkageResult r;
  auto paths = sn.decompose(sn.super_source, -1);
  if (flow < static_cast<int>(xs.size())) {
    r.paths = std::move(paths);
    r.separation = sn.cut(sn.super_source, is_source);
    return r;
  }
  r.paths.resize(x_in.size());
  for (auto& p : paths)
    for (std::size_t i = 0; i < x_in.size(); ++i)
      if (x_in[i] == p.front() && r.paths[i].empty()) {
        r.paths[i] = p;
        break;
      }
  return r;
}

WellConnectedResult well_connected_impl(const Adj& a, std::span<const int> s_in) {
  const auto s = sorted_unique(s_in);
  WellConnectedResult r;
  int live = 0;
  for (int x = 0; x < a.n; ++x) live += a.live[x];
  if (static_cast<int>(s.size()) == live) return r;
  if (s.empty()) {
    r.well_connected = true;
    return r;
  }
  for (int v = 0; v < a.n; ++v) {
    if (!a.live[v] || std::binary_search(s.begin(), s.end(), v)) continue;
    auto fan = fan_impl(a, v, s);
    if (fan.separation) {
      r.witness = std::move(fan.separation);
      return r;
    }
  }
  r.well_connected = true;
  return r;
}

bool better(const Separation& cand, const std::optional<Separation>& best) {
  if (!best) return true;
  const auto cs = cand.separator();
  const auto bs = best->separator();
  if (cs.size() != bs.size()) return cs.size() < bs.size();
  return cs < bs;
}

std::optional<Separation> bounded_impl(const Adj& a, std::span<const int> s_in, int k,
                                       std::optional<int> required) {
  const auto s = sorted_unique(s_in);
  require_live(a, s, "bounded_order_separation");
  std::optional<Separation> best;
  if (k < 0) return best;
  auto in_s = [&](int x) { return std::binary_search(s.begin(), s.end(), x); };
  std::vector<int> origins;
  if (required) {
    require_live(a, std::span<const int>(&*required, 1), "bounded_order_separation");
    if (!in_s(*required)) origins.push_back(*required);
  } else {
    for (int v = 0; v < a.n; ++v)
      if (a.live[v] && !in_s(v)) origins.push_back(v);
  }
  for (int v : origins) {
    int limit = best ? std::min(k, best->order()) : k;
    std::vector<Role> roles(a.n, Role::kPlain);
    for (int x : s) roles[x] = Role::kTerminal;
    roles[v] = Role::kOrigin;
    {
      SplitNetwork sn(a, roles, true);
      const int flow = sn.net.max_flow(out_node(v), sn.super_sink, limit + 1);
      if (flow > limit) continue;
      Separation cand = sn.cut(out_node(v), {});
      if (cand.nontrivial()) {
        if (better(cand, best)) best = std::move(cand);
        continue;
      }
    }
    const auto& nb = a.out[v];
    for (int anchor = 0; anchor < a.n; ++anchor) {
      if (!a.live[anchor] || anchor == v || std::binary_search(nb.begin(), nb.end(), anchor))
        continue;
      limit = best ? std::min(k, best->order()) : k;
      auto r2 = roles;
      r2[anchor] = Role::kAnchor;
      SplitNetwork sn(a, std::move(r2), true);
      const int flow = sn.net.max_flow(out_node(v), sn.super_sink, limit + 1);
      if (flow > limit) continue;
      Separation cand = sn.cut(out_node(v), {});
      if (cand.nontrivial() && better(cand, best)) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace

FanResult max_fan(const Graph& g, int v, std::span<const int> s) {
  if (s.empty()) fail(ErrorKind::kDomain, "max_fan: empty target set");
  return fan_impl(adjacency(g), v, s);
}

FanResult max_fan(const Digraph& d, int v, std::span<const int> s, bool reverse) {
  if (s.empty()) fail(ErrorKind::kDomain, "max_fan: empty target set");
  return fan_impl(adjacency(d, reverse), v, s);
}

LinkageResult disjoint_linkage(const Graph& g, std::span<const int> x, std::span<const int> y,
                               bool internally_disjoint_from_y) {
  return linkage_impl(adjacency(g), x, y, internally_disjoint_from_y);
}

LinkageResult disjoint_linkage(const Digraph& d, std::span<const int> x, std::span<const int> y,
                               bool internally_disjoint_from_y) {
  return linkage_impl(adjacency(d, false), x, y, internally_disjoint_from_y);
}

WellConnectedResult is_well_connected(const Graph& g, std::span<const int> s) {
  return well_connected_impl(adjacency(g), s);
}

WellConnectedResult is_well_connected(const Digraph& d, std::span<const int> s) {
  return well_connected_impl(adjacency(d, false), s);
}

std::optional<Separation> bounded_order_separation(const Graph& g, std::span<const int> s, int k,
                                                   std::optional<int> required) {
  return bounded_impl(adjacency(g), s, k, required);
}

std::optional<Separation> bounded_order_separation(const Digraph& d, std::span<const int> s,
                                                   int k, std::optional<int> required) {
  return bounded_impl(adjacency(d, false), s, k, required);
}

std::vector<int> in_boundary(const Digraph& d, std::span<const int> s_in) {
  const auto s = sorted_unique(s_in);
  std::vector<int> out;
  for (int v : s)
    for (int u : d.in_neighbors(v))
      if (!std::binary_search(s.begin(), s.end(), u)) {
        out.push_back(v);
        break;
      }
  return out;
}

namespace {

template <class Neighbors>
bool separation_ok(const std::vector<int>& live, const Separation& sep, Neighbors&& nb) {
  std::vector<int> uni;
  std::set_union(sep.a.begin(), sep.a.end(), sep.b.begin(), sep.b.end(), std::back_inserter(uni));
  if (uni != live) return false;
  const auto x = sep.separator();
  auto only_b = [&](int w) {
    return std::binary_search(sep.b.begin(), sep.b.end(), w) &&
           !std::binary_search(x.begin(), x.end(), w);
  };
  auto only_a = [&](int w) {
    return std::binary_search(sep.a.begin(), sep.a.end(), w) &&
           !std::binary_search(x.begin(), x.end(), w);
  };
  for (int u : live)
    if (only_b(u))
      for (int w : nb(u))
        if (only_a(w)) return false;
  return true;
}

}  // namespace

bool is_separation(const Graph& g, const Separation& sep) {
  return separation_ok(g.vertices(), sep, [&](int u) { return g.neighbors(u); });
}

bool is_separation(const Digraph& d, const Separation& sep) {
  return separation_ok(d.vertices(), sep, [&](int u) { return d.out_neighbors(u); });
}

}  // namespace cominor
