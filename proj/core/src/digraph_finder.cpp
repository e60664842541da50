#include "cominor/digraph_finder.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cominor/connectivity.hpp"
#include "cominor/error.hpp"
#include "cominor/flow.hpp"

namespace cominor {

int in_arborescence_root(const Digraph& t) {
  const auto vs = t.vertices();
  if (vs.empty()) fail(ErrorKind::kDomain, "in-arborescence: empty pattern");
  int root = -1;
  for (int v : vs) {
    if (t.out_degree(v) == 0) {
      if (root >= 0) fail(ErrorKind::kDomain, "in-arborescence: two sinks");
      root = v;
    } else if (t.out_degree(v) != 1) {
      fail(ErrorKind::kDomain, "in-arborescence: out-degree above 1 at " + std::to_string(v));
    }
  }
  if (root < 0) fail(ErrorKind::kDomain, "in-arborescence: no root");
  for (int v : vs) {
    int x = v;
    for (std::size_t hops = 0; x != root; ++hops) {
      if (hops > vs.size()) fail(ErrorKind::kDomain, "in-arborescence: directed cycle");
      x = t.out_neighbors(x)[0];
    }
  }
  return root;
}

namespace {

using ArcKey = std::pair<int, int>;

class ButterflySearch {
 public:
  ButterflySearch(const Digraph& d, const Digraph& t) : t_(t) {
    root_ = in_arborescence_root(t);
    w_ = d.induced(strongly_connected_sink_component(d));
    const int cap = w_.capacity();
    merged_.resize(cap);
    core_.assign(cap, -1);
    tree_.resize(cap);
    in_s_.assign(cap, 0);
    for (int v : w_.vertices()) {
      merged_[v] = {v};
      core_[v] = v;
    }
    for (const Edge& a : w_.arcs()) orig_[{a.u, a.v}] = a;
    phi_.assign(t.capacity(), -1);
  }

  ApexButterflyResult run() {
    const int t = t_.vertex_count();
    const long bound = static_cast<long>(w_.vertex_count() + 1) * (t + 1);
    const int first = w_.vertices().front();
    place(root_, first, -1);
    while (true) {
      if (++steps_ > bound) violation("step bound exceeded");
      const auto s = s_list();
      if (static_cast<int>(s.size()) == t) return finish(s);
      if (auto sep = bounded_order_separation(w_, s, static_cast<int>(s.size()))) {
        reduce(*sep, s);
        continue;
      }
      extend();
    }
  }

 private:
  std::vector<int> s_list() const {
    std::vector<int> s;
    for (int p : phi_)
      if (p >= 0) s.push_back(p);
    std::sort(s.begin(), s.end());
    return s;
  }

  Edge orig(int u, int v) const {
    auto it = orig_.find({u, v});
    if (it == orig_.end() || !w_.has_arc(u, v))
      violation("no host arc behind (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return it->second;
  }

  void drop_arc(int u, int v) {
    w_.remove_arc(u, v);
    orig_.erase({u, v});
  }

  void drop_vertex(int v) {
    for (int w : w_.out_neighbors(v)) orig_.erase({v, w});
    for (int w : w_.in_neighbors(v)) orig_.erase({w, v});
    w_.remove_vertex(v);
  }

  // Maps pattern vertex p to host vertex v, keeping only the arc to `parent`.
  void place(int p, int v, int parent) {
    phi_[p] = v;
    in_s_[v] = 1;
    const std::vector<int> outs(w_.out_neighbors(v).begin(), w_.out_neighbors(v).end());
    for (int w : outs)
      if (w != parent) drop_arc(v, w);
  }

  void extend() {
    for (int p : t_.vertices()) {
      if (phi_[p] >= 0) continue;
      const int parent = t_.out_neighbors(p)[0];
      if (phi_[parent] < 0) continue;
      const int target = phi_[parent];
      for (int u : w_.in_neighbors(target))
        if (!in_s_[u]) {
          place(p, u, target);
          return;
        }
      violation("image of " + std::to_string(parent) + " has no in-neighbor outside S");
    }
    violation("no frontier pattern vertex");
  }

  // p has out-degree 1 with head q; p is absorbed into q.
  int merge(int p, int q) {
    const Edge o = orig(p, q);
    ContractionDelta delta;
    w_ = butterfly_contract(w_, {p, q}, delta);
    std::map<ArcKey, Edge> next;
    for (const auto& [key, arc] : orig_) {
      if (key == ArcKey{p, q} || key == ArcKey{q, p}) continue;
      auto rename = [&](int x) { return x == delta.removed ? delta.survivor : x; };
      const int a = rename(key.first), b = rename(key.second);
      if (a == b) continue;
      next.emplace(ArcKey{a, b}, arc);
    }
    orig_ = std::move(next);
    std::vector<int> m = merged_[p];
    m.insert(m.end(), merged_[q].begin(), merged_[q].end());
    std::sort(m.begin(), m.end());
    std::vector<Edge> tr = tree_[p];
    tr.insert(tr.end(), tree_[q].begin(), tree_[q].end());
    tr.push_back(o);
    const int c = core_[q];
    const char s = in_s_[q];
    for (int x : {p, q}) {
      merged_[x].clear();
      tree_[x].clear();
      core_[x] = -1;
      in_s_[x] = 0;
    }
    const int surv = delta.survivor;
    merged_[surv] = std::move(m);
    tree_[surv] = std::move(tr);
    core_[surv] = c;
    in_s_[surv] = s;
    for (int& x : phi_)
      if (x == p || x == q) x = surv;
    return surv;
  }

  void reduce(const Separation& sep, const std::vector<int>& s) {
    ++separations_;
    if (sep.order() != static_cast<int>(s.size()))
      violation("separation of order " + std::to_string(sep.order()) + " below |S|");
    const auto x = sep.separator();
    const auto link = disjoint_linkage(w_, x, s, true);
    if (!link.complete()) violation("no linkage from the separator to S");
    std::vector<int> next_on_path(w_.capacity(), -1);
    std::vector<char> on_path(w_.capacity(), 0);
    for (const auto& path : link.paths)
      for (std::size_t i = 0; i < path.size(); ++i) {
        on_path[path[i]] = 1;
        if (i + 1 < path.size()) next_on_path[path[i]] = path[i + 1];
      }
    for (int v : sep.a)
      if (!on_path[v]) drop_vertex(v);
    for (const auto& path : link.paths)
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int v = path[i];
        const std::vector<int> outs(w_.out_neighbors(v).begin(), w_.out_neighbors(v).end());
        for (int w : outs)
          if (w != next_on_path[v]) drop_arc(v, w);
      }
    for (const auto& path : link.paths) {
      int cur = path.back();
      for (int i = static_cast<int>(path.size()) - 2; i >= 0; --i) {
        int p = path[i];
        cur = merge(p, cur);
      }
    }
  }

  ApexButterflyResult finish(const std::vector<int>& s) {
    int v = -1;
    for (int x : w_.vertices())
      if (!in_s_[x]) {
        v = x;
        break;
      }
    if (v < 0) violation("S covers the working digraph");
    const auto fan = max_fan(w_, v, s);
    if (fan.separation) violation("fan from " + std::to_string(v) + " is smaller than |S|");

    ApexButterflyResult r;
    r.pattern = add_apex_source(t_);
    const int apex = t_.capacity();
    r.embedding.apex = apex;
    r.embedding.branch.resize(r.pattern.capacity());
    std::vector<int> pattern_of(w_.capacity(), -1);
    for (int p : t_.vertices()) {
      const int img = phi_[p];
      pattern_of[img] = p;
      auto& b = r.embedding.branch[p];
      b.in_part = merged_[img];
      b.in_root = core_[img];
      b.arcs = tree_[img];
    }
    for (const Edge& a : t_.arcs()) r.embedding.realization.push_back({a, orig(phi_[a.u], phi_[a.v])});
    for (const auto& path : fan.fan.paths) {
      const int p = pattern_of[path.back()];
      auto& b = r.embedding.branch[p];
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        b.in_part.push_back(path[i]);
        b.arcs.push_back(orig(path[i], path[i + 1]));
      }
      std::sort(b.in_part.begin(), b.in_part.end());
      r.embedding.realization.push_back({Edge{apex, p}, orig(path[0], path[1])});
    }
    auto& ab = r.embedding.branch[apex];
    ab.in_part = {v};
    ab.in_root = v;
    std::sort(r.embedding.realization.begin(), r.embedding.realization.end(),
              [](const auto& a, const auto& b) {
                return std::pair(a.first.u, a.first.v) < std::pair(b.first.u, b.first.v);
              });
    r.steps = steps_;
    r.separations = separations_;
    return r;
  }

  [[noreturn]] void violation(const std::string& what) const {
    std::ostringstream os;
    os << "find_apex_inarb_butterfly: " << what << " [|S|=" << s_list().size()
       << " |V|=" << w_.vertex_count() << " step=" << steps_ << ']';
    fail(ErrorKind::kInvariantViolation, os.str());
  }

  const Digraph& t_;
  int root_ = -1;
  Digraph w_;
  std::vector<std::vector<int>> merged_;
  std::vector<int> core_;
  std::vector<std::vector<Edge>> tree_;
  std::vector<char> in_s_;
  std::map<ArcKey, Edge> orig_;
  std::vector<int> phi_;
  int steps_ = 0;
  int separations_ = 0;
};

}  // namespace

ApexButterflyResult find_apex_inarb_butterfly(const Digraph& d, const Digraph& t) {
  in_arborescence_root(t);
  if (d.vertex_count() == 0 || degree_profile(d).min_out < t.vertex_count())
    fail(ErrorKind::kHypothesis, "find_apex_inarb_butterfly: minimum out-degree below |V(T)|");
  return ButterflySearch(d, t).run();
}


namespace {

using PathMap = std::map<ArcKey, std::vector<int>>;

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

SubdivisionEmbedding assemble(const Digraph& pattern, std::vector<int> branch, PathMap paths,
                              std::string tag) {
  SubdivisionEmbedding s;
  s.branch = std::move(branch);
  s.tag = std::move(tag);
  for (const Edge& a : pattern.arcs()) s.paths.push_back({a, paths.at({a.u, a.v})});
  return s;
}

PathMap path_map(const SubdivisionEmbedding& s) {
  PathMap m;
  for (const auto& [a, p] : s.paths) m[{a.u, a.v}] = p;
  return m;
}

// Fan from y into S minimizing the total number of vertices, shortened so
// that each path meets the out-neighborhood of y only in its second vertex.
std::vector<Path> shortest_fan(const Digraph& d, int y, const std::vector<char>& in_s, int want) {
  const int n = d.capacity();
  auto in_node = [](int x) { return 2 * x; };
  auto out_node = [](int x) { return 2 * x + 1; };
  const int sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (int x : d.vertices()) {
    if (in_s[x]) net.add_arc(in_node(x), sink, 1, 1);
    else if (x != y) net.add_arc(in_node(x), out_node(x), 1, 1);
  }
  for (int u : d.vertices()) {
    if (in_s[u]) continue;
    for (int w : d.out_neighbors(u))
      if (w != y) net.add_arc(out_node(u), in_node(w), 1, 0);
  }
  if (net.min_cost_flow(out_node(y), sink, want) < want) return {};
  std::vector<std::vector<int>> used(net.node_count());
  for (int node = 0; node < net.node_count(); ++node)
    for (int id : net.arcs_from(node))
      if ((id & 1) == 0 && net.flow_on(id) > 0) used[node].push_back(id);
  std::vector<Path> paths;
  for (int id : used[out_node(y)]) {
    Path p{y};
    int node = net.head(id);
    while (node != sink) {
      if (node % 2 == 0) p.push_back(node / 2);
      node = net.head(used[node].front());
    }
    for (std::size_t j = p.size() - 1; j >= 1; --j)
      if (d.has_arc(y, p[j])) {
        p.erase(p.begin() + 1, p.begin() + static_cast<long>(j));
        break;
      }
    paths.push_back(std::move(p));
  }
  return paths;
}

class WheelSearch {
 public:
  WheelSearch(const Digraph& d, int t) : t_(t) {
    q_ = d.induced(strongly_connected_sink_component(d));
    in_s_.assign(q_.capacity(), 0);
  }

  WheelResult run() {
    shortest_cycle();
    for (int v : cycle_) in_s_[v] = 1;
    x_ = *std::min_element(cycle_.begin(), cycle_.end());
    y_ = -1;
    for (int w : q_.out_neighbors(x_))
      if (!in_s_[w]) {
        y_ = w;
        break;
      }
    if (y_ < 0) violation("cycle vertex without an arc leaving the cycle");
    const int bound = q_.vertex_count() + 1;
    while (true) {
      if (++steps_ > 2 * bound) violation("step bound exceeded");
      const auto s = members();
      const auto boundary = in_boundary(q_, s);
      const int k = static_cast<int>(boundary.size());
      if (k == 0) violation("empty in-boundary");
      if (auto sep = bounded_order_separation(q_, s, k - 1, y_)) {
        ++separations_;
        if (sep->a.size() <= s.size()) violation("separation does not enlarge S");
        for (int v : sep->a) in_s_[v] = 1;
        continue;
      }
      const auto p = cycle_linkage(boundary);
      const auto fan = shortest_fan(q_, y_, in_s_, k);
      if (static_cast<int>(fan.size()) != k) violation("fan from y smaller than the in-boundary");
      std::vector<Path> q(k);
      for (const auto& f : fan) {
        const auto it = std::lower_bound(boundary.begin(), boundary.end(), f.back());
        q[it - boundary.begin()] = f;
      }
      if (k >= t_) return assemble_wheel(p, q);
      reroute(p, q);
    }
  }

 private:
  std::vector<int> members() const {
    std::vector<int> s;
    for (int v : q_.vertices())
      if (in_s_[v]) s.push_back(v);
    return s;
  }

  void shortest_cycle() {
    std::size_t best = 0;
    for (int s : q_.vertices()) {
      std::vector<int> parent(q_.capacity(), -2);
      std::vector<int> queue{s};
      parent[s] = -1;
      int closing = -1;
      for (std::size_t h = 0; h < queue.size() && closing < 0; ++h) {
        const int u = queue[h];
        for (int w : q_.out_neighbors(u)) {
          if (w == s) {
            closing = u;
            break;
          }
          if (parent[w] == -2) {
            parent[w] = u;
            queue.push_back(w);
          }
        }
      }
      if (closing < 0) continue;
      std::vector<int> c;
      for (int v = closing; v >= 0; v = parent[v]) c.push_back(v);
      std::reverse(c.begin(), c.end());
      if (best == 0 || c.size() < best) {
        best = c.size();
        cycle_ = std::move(c);
      }
    }
    if (cycle_.empty()) violation("no directed cycle");
  }

  // Disjoint paths inside G[S] from the in-boundary to the cycle.
  std::vector<Path> cycle_linkage(const std::vector<int>& boundary) const {
    const Digraph inside = q_.induced(members());
    const auto link = disjoint_linkage(inside, boundary, cycle_, true);
    if (!link.complete()) violation("in-boundary is not linked to the cycle");
    return link.paths;
  }

  int cycle_pos(int v) const {
    return static_cast<int>(std::find(cycle_.begin(), cycle_.end(), v) - cycle_.begin());
  }

  // Cycle vertices from position a forward to position b, inclusive.
  std::vector<int> segment(int a, int b) const {
    const int len = static_cast<int>(cycle_.size());
    std::vector<int> out{cycle_[a]};
    for (int i = a; i != b;) {
      i = (i + 1) % len;
      out.push_back(cycle_[i]);
    }
    return out;
  }

  // Path indices ordered by the position of their cycle end, walking from x.
  std::vector<int> ends_from_x(const std::vector<Path>& p) const {
    const int len = static_cast<int>(cycle_.size());
    const int ix = cycle_pos(x_);
    std::vector<int> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = static_cast<int>(i);
    auto key = [&](int i) { return (cycle_pos(p[i].back()) - ix + len) % len; };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    return order;
  }

  void reroute(const std::vector<Path>& p, const std::vector<Path>& q) {
    std::vector<char> on_q(q_.capacity(), 0);
    for (const auto& path : q)
      for (int v : path) on_q[v] = 1;
    int next_y = -1;
    for (int w : q_.out_neighbors(y_))
      if (!in_s_[w] && !on_q[w]) {
        next_y = w;
        break;
      }
    if (next_y < 0) violation("no fresh out-neighbor of y");
    const int len = static_cast<int>(cycle_.size());
    const int ix = cycle_pos(x_);
    int j = -1, iz = -1;
    for (int step = 1; step <= len && j < 0; ++step) {
      const int pos = (ix + step) % len;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].back() == cycle_[pos]) {
          j = static_cast<int>(i);
          iz = pos;
        }
    }
    if (j < 0) violation("no linkage path reaches the cycle");
    std::vector<int> next = segment(iz, ix);
    next.insert(next.end(), q[j].begin(), q[j].end());
    next.insert(next.end(), p[j].begin() + 1, p[j].end());
    next.pop_back();
    for (int v : q[j]) in_s_[v] = 1;
    cycle_ = std::move(next);
    x_ = y_;
    y_ = next_y;
  }

  WheelResult assemble_wheel(const std::vector<Path>& p, const std::vector<Path>& q) {
    const auto order = ends_from_x(p);
    const bool through_x = p[order[0]].back() == x_;
    WheelResult r;
    std::vector<int> rim;
    std::vector<Path> spokes;
    if (!through_x) rim.push_back(x_);
    for (int i = 0; i < t_; ++i) {
      const int k = order[i];
      rim.push_back(p[k].back());
      spokes.push_back(join(q[k], p[k]));
    }
    const int m = static_cast<int>(rim.size());
    r.pattern = through_x ? directed_wheel_w1(t_) : directed_wheel_w2(t_ + 1);
    const int hub = m;
    PathMap paths;
    for (int i = 0; i < m; ++i)
      paths[{i, (i + 1) % m}] = segment(cycle_pos(rim[i]), cycle_pos(rim[(i + 1) % m]));
    const int first_spoke = through_x ? 0 : 1;
    for (int i = first_spoke; i < m; ++i) paths[{hub, i}] = spokes[i - first_spoke];
    paths[{0, hub}] = {x_, y_};
    std::vector<int> branch = rim;
    branch.push_back(y_);
    r.embedding = assemble(r.pattern, std::move(branch), std::move(paths), through_x ? "W1" : "W2");
    r.plus = wheel_plus_from(r.embedding, t_);
    r.w2 = wheel_w2_from(r.embedding, t_);
    r.steps = steps_;
    r.separations = separations_;
    return r;
  }

  [[noreturn]] void violation(const std::string& what) const {
    std::ostringstream os;
    os << "find_wheel_subdivision: " << what << " [|S|=" << members().size()
       << " |C|=" << cycle_.size() << " step=" << steps_ << ']';
    fail(ErrorKind::kInvariantViolation, os.str());
  }

  int t_;
  Digraph q_;
  std::vector<char> in_s_;
  std::vector<int> cycle_;
  int x_ = -1;
  int y_ = -1;
  int steps_ = 0;
  int separations_ = 0;
};

}  // namespace

WheelResult find_wheel_subdivision(const Digraph& d, int t) {
  if (t < 2) fail(ErrorKind::kDomain, "find_wheel_subdivision: t must be at least 2");
  if (d.vertex_count() == 0 || degree_profile(d).min_out < t)
    fail(ErrorKind::kHypothesis, "find_wheel_subdivision: minimum out-degree below t");
  return WheelSearch(d, t).run();
}

SubdivisionEmbedding wheel_plus_from(const SubdivisionEmbedding& wheel, int t) {
  const Digraph plus = directed_wheel_plus(t);
  auto old = path_map(wheel);
  PathMap paths;
  std::vector<int> branch(t + 1);
  if (wheel.tag == "W1") {
    for (int i = 0; i <= t; ++i) branch[i] = wheel.branch[i];
    for (const Edge& a : plus.arcs()) paths[{a.u, a.v}] = old.at({a.u, a.v});
  } else if (wheel.tag == "W2") {
    for (int i = 0; i < t; ++i) branch[i] = wheel.branch[i + 1];
    branch[t] = wheel.branch[t + 1];
    for (int i = 0; i + 1 < t; ++i) paths[{i, i + 1}] = old.at({i + 1, i + 2});
    paths[{t - 1, 0}] = join(old.at({t, 0}), old.at({0, 1}));
    for (int i = 0; i < t; ++i) paths[{t, i}] = old.at({t + 1, i + 1});
  } else {
    fail(ErrorKind::kDomain, "wheel_plus_from: unknown tag " + wheel.tag);
  }
  return assemble(plus, std::move(branch), std::move(paths), "C+");
}

SubdivisionEmbedding wheel_w2_from(const SubdivisionEmbedding& wheel, int t) {
  const Digraph w2 = directed_wheel_w2(t);
  auto old = path_map(wheel);
  PathMap paths;
  std::vector<int> branch(t + 1);
  if (wheel.tag == "W1") {
    for (int i = 0; i <= t; ++i) branch[i] = wheel.branch[i];
    for (const Edge& a : w2.arcs()) paths[{a.u, a.v}] = old.at({a.u, a.v});
  } else if (wheel.tag == "W2") {
    for (int i = 0; i < t; ++i) branch[i] = wheel.branch[i];
    branch[t] = wheel.branch[t + 1];
    for (int i = 0; i + 1 < t; ++i) paths[{i, i + 1}] = old.at({i, i + 1});
    paths[{t - 1, 0}] = join(old.at({t - 1, t}), old.at({t, 0}));
    paths[{0, t}] = old.at({0, t + 1});
    for (int i = 1; i < t; ++i) paths[{t, i}] = old.at({t + 1, i});
  } else {
    fail(ErrorKind::kDomain, "wheel_w2_from: unknown tag " + wheel.tag);
  }
  return assemble(w2, std::move(branch), std::move(paths), "W2");
}

Digraph two_block_tree(int k1, int k2) {
  if (k1 < 1 || k2 < 1 || k1 + k2 < 3)
    fail(ErrorKind::kDomain, "two-block wheel: need k1, k2 >= 1 and k1 + k2 >= 3");
  Digraph t(k1 + k2 - 1);
  int next = 1;
  for (int len : {k1, k2}) {
    for (int i = 1; i < len; ++i, ++next) t.add_arc(next, i + 1 < len ? next + 1 : 0);
  }
  return t;
}

Digraph two_block_wheel(int k1, int k2) {
  Digraph h = add_apex_source(two_block_tree(k1, k2));
  const int a = k1 + k2 - 1;
  if (k1 > 1 && k2 > 1) h.remove_arc(a, 0);
  return h;
}

TwoBlockResult find_two_block_wheel(const Digraph& d, int k1, int k2) {
  const Digraph tree = two_block_tree(k1, k2);
  if (d.vertex_count() == 0 || degree_profile(d).min_out < k1 + k2 - 1)
    fail(ErrorKind::kHypothesis, "find_two_block_wheel: minimum out-degree below k1 + k2 - 1");
  const auto model = find_apex_inarb_butterfly(d, tree);
  TwoBlockResult r;
  r.pattern = two_block_wheel(k1, k2);
  r.embedding = butterfly_to_subdivision(d, r.pattern, restrict_butterfly(model.embedding, r.pattern));
  r.embedding.tag = "C(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
  return r;
}

}  // namespace cominor
