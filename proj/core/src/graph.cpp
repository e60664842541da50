#include "cominor/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace cominor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kNotButterfly: return "contraction-not-butterfly";
    case ErrorKind::kHypothesis: return "hypothesis";
    case ErrorKind::kInvariantViolation: return "invariant-violation";
    case ErrorKind::kContractStep: return "contract-step";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

namespace {

constexpr int kBitsetLimit = 64;

void sorted_insert(std::vector<int>& xs, int v) {
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  if (it == xs.end() || *it != v) xs.insert(it, v);
}

bool sorted_erase(std::vector<int>& xs, int v) {
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  if (it == xs.end() || *it != v) return false;
  xs.erase(it);
  return true;
}

bool sorted_contains(const std::vector<int>& xs, int v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) {
  if (n < 0) fail(ErrorKind::kDomain, "negative vertex count");
  adj_.assign(n, {});
  live_.assign(n, 1);
  if (n <= kBitsetLimit) bits_.assign(n, 0);
  live_count_ = n;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n && n >= 3; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

void Graph::check_vertex(int v, const char* where) const {
  if (!is_live(v))
    fail(ErrorKind::kDomain, std::string(where) + ": vertex " + std::to_string(v) + " is not live");
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(live_count_);
  for (int v = 0; v < capacity(); ++v)
    if (live_[v]) out.push_back(v);
  return out;
}

bool Graph::has_edge(int u, int v) const {
  if (!is_live(u) || !is_live(v)) return false;
  if (!bits_.empty()) return (bits_[u] >> v) & 1U;
  return sorted_contains(adj_[u], v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < capacity(); ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) fail(ErrorKind::kDomain, "add_edge: loops are not allowed");
  if (has_edge(u, v)) return;
  sorted_insert(adj_[u], v);
  sorted_insert(adj_[v], u);
  if (!bits_.empty()) {
    bits_[u] |= std::uint64_t{1} << v;
    bits_[v] |= std::uint64_t{1} << u;
  }
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  sorted_erase(adj_[u], v);
  sorted_erase(adj_[v], u);
  if (!bits_.empty()) {
    bits_[u] &= ~(std::uint64_t{1} << v);
    bits_[v] &= ~(std::uint64_t{1} << u);
  }
  --edge_count_;
}

void Graph::remove_vertex(int v) {
  check_vertex(v, "remove_vertex");
  for (int w : std::vector<int>(adj_[v])) remove_edge(v, w);
  live_[v] = 0;
  --live_count_;
}

int Graph::add_vertex() {
  const int id = capacity();
  adj_.emplace_back();
  live_.push_back(1);
  ++live_count_;
  if (id + 1 <= kBitsetLimit && bits_.size() == static_cast<std::size_t>(id)) {
    bits_.push_back(0);
  } else {
    bits_.clear();
  }
  return id;
}

Graph Graph::induced(std::span<const int> keep) const {
  std::vector<char> in(capacity(), 0);
  for (int v : keep) {
    check_vertex(v, "induced");
    in[v] = 1;
  }
  Graph g = *this;
  for (int v = 0; v < capacity(); ++v)
    if (live_[v] && !in[v]) g.remove_vertex(v);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.live_ == b.live_ && a.adj_ == b.adj_;
}

// -------------------------------------------------------------- Digraph

Digraph::Digraph(int n) {
  if (n < 0) fail(ErrorKind::kDomain, "negative vertex count");
  out_.assign(n, {});
  in_.assign(n, {});
  live_.assign(n, 1);
  if (n <= kBitsetLimit) bits_.assign(n, 0);
  live_count_ = n;
}

Digraph Digraph::from_arcs(int n, std::span<const Edge> arcs) {
  Digraph d(n);
  for (const Edge& a : arcs) d.add_arc(a.u, a.v);
  return d;
}

Digraph Digraph::biorientation(const Graph& g) {
  Digraph d(g.capacity());
  for (int v = 0; v < g.capacity(); ++v)
    if (!g.is_live(v)) d.remove_vertex(v);
  for (const Edge& e : g.edges()) {
    d.add_arc(e.u, e.v);
    d.add_arc(e.v, e.u);
  }
  return d;
}

Digraph Digraph::directed_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n && n >= 2; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

void Digraph::check_vertex(int v, const char* where) const {
  if (!is_live(v))
    fail(ErrorKind::kDomain, std::string(where) + ": vertex " + std::to_string(v) + " is not live");
}

std::vector<int> Digraph::vertices() const {
  std::vector<int> out;
  out.reserve(live_count_);
  for (int v = 0; v < capacity(); ++v)
    if (live_[v]) out.push_back(v);
  return out;
}

bool Digraph::has_arc(int u, int v) const {
  if (!is_live(u) || !is_live(v)) return false;
  if (!bits_.empty()) return (bits_[u] >> v) & 1U;
  return sorted_contains(out_[u], v);
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  out.reserve(arc_count_);
  for (int u = 0; u < capacity(); ++u)
    for (int v : out_[u]) out.push_back({u, v});
  return out;
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u, "add_arc");
  check_vertex(v, "add_arc");
  if (u == v) fail(ErrorKind::kDomain, "add_arc: loops are not allowed");
  if (has_arc(u, v)) return;
  sorted_insert(out_[u], v);
  sorted_insert(in_[v], u);
  if (!bits_.empty()) bits_[u] |= std::uint64_t{1} << v;
  ++arc_count_;
}

void Digraph::remove_arc(int u, int v) {
  if (!has_arc(u, v)) return;
  sorted_erase(out_[u], v);
  sorted_erase(in_[v], u);
  if (!bits_.empty()) bits_[u] &= ~(std::uint64_t{1} << v);
  --arc_count_;
}

void Digraph::remove_vertex(int v) {
  check_vertex(v, "remove_vertex");
  for (int w : std::vector<int>(out_[v])) remove_arc(v, w);
  for (int w : std::vector<int>(in_[v])) remove_arc(w, v);
  live_[v] = 0;
  --live_count_;
}

int Digraph::add_vertex() {
  const int id = capacity();
  out_.emplace_back();
  in_.emplace_back();
  live_.push_back(1);
  ++live_count_;
  if (id + 1 <= kBitsetLimit && bits_.size() == static_cast<std::size_t>(id)) {
    bits_.push_back(0);
  } else {
    bits_.clear();
  }
  return id;
}

Digraph Digraph::induced(std::span<const int> keep) const {
  std::vector<char> in(capacity(), 0);
  for (int v : keep) {
    check_vertex(v, "induced");
    in[v] = 1;
  }
  Digraph d = *this;
  for (int v = 0; v < capacity(); ++v)
    if (live_[v] && !in[v]) d.remove_vertex(v);
  return d;
}

Digraph Digraph::reversed() const {
  Digraph d(capacity());
  for (int v = 0; v < capacity(); ++v)
    if (!live_[v]) d.remove_vertex(v);
  for (const Edge& a : arcs()) d.add_arc(a.v, a.u);
  return d;
}

Graph Digraph::underlying() const {
  Graph g(capacity());
  for (int v = 0; v < capacity(); ++v)
    if (!live_[v]) g.remove_vertex(v);
  for (const Edge& a : arcs()) g.add_edge(a.u, a.v);
  return g;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.live_ == b.live_ && a.out_ == b.out_;
}

// --------------------------------------------------------- contractions

Graph contract_edge(const Graph& g, Edge e) {
  ContractionDelta delta;
  return contract_edge(g, e, delta);
}

Graph contract_edge(const Graph& g, Edge e, ContractionDelta& delta) {
  if (!g.has_edge(e.u, e.v))
    fail(ErrorKind::kDomain, "contract_edge: {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "} is not an edge");
  const int keep = std::min(e.u, e.v);
  const int drop = std::max(e.u, e.v);
  Graph out = g;
  for (int w : g.neighbors(drop))
    if (w != keep) out.add_edge(keep, w);
  out.remove_vertex(drop);
  delta = {keep, drop};
  return out;
}

Digraph contract_arc_unchecked(const Digraph& d, Edge arc, ContractionDelta& delta) {
  if (!d.has_arc(arc.u, arc.v))
    fail(ErrorKind::kDomain, "contract: (" + std::to_string(arc.u) + "," +
                                 std::to_string(arc.v) + ") is not an arc");
  const int keep = std::min(arc.u, arc.v);
  const int drop = std::max(arc.u, arc.v);
  Digraph out = d;
  for (int w : d.out_neighbors(drop))
    if (w != keep) out.add_arc(keep, w);
  for (int w : d.in_neighbors(drop))
    if (w != keep) out.add_arc(w, keep);
  out.remove_vertex(drop);
  delta = {keep, drop};
  return out;
}

Digraph butterfly_contract(const Digraph& d, Edge arc) {
  ContractionDelta delta;
  return butterfly_contract(d, arc, delta);
}

Digraph butterfly_contract(const Digraph& d, Edge arc, ContractionDelta& delta) {
  if (!d.has_arc(arc.u, arc.v))
    fail(ErrorKind::kDomain, "butterfly_contract: not an arc");
  if (d.out_degree(arc.u) != 1 && d.in_degree(arc.v) != 1)
    fail(ErrorKind::kNotButterfly,
         "butterfly_contract: (" + std::to_string(arc.u) + "," + std::to_string(arc.v) +
             ") has tail out-degree " + std::to_string(d.out_degree(arc.u)) +
             " and head in-degree " + std::to_string(d.in_degree(arc.v)));
  return contract_arc_unchecked(d, arc, delta);
}

Graph add_apex(const Graph& h) {
  Graph out = h;
  const int apex = out.add_vertex();
  for (int v : h.vertices()) out.add_edge(apex, v);
  return out;
}

Digraph add_apex_source(const Digraph& h) {
  Digraph out = h;
  const int apex = out.add_vertex();
  for (int v : h.vertices()) out.add_arc(apex, v);
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degree.assign(g.capacity(), -1);
  bool first = true;
  for (int v : g.vertices()) {
    const int d = g.degree(v);
    p.degree[v] = d;
    p.min_degree = first ? d : std::min(p.min_degree, d);
    p.max_degree = first ? d : std::max(p.max_degree, d);
    first = false;
  }
  return p;
}

DirectedDegreeProfile degree_profile(const Digraph& d) {
  DirectedDegreeProfile p;
  p.out_degree.assign(d.capacity(), -1);
  p.in_degree.assign(d.capacity(), -1);
  bool first = true;
  for (int v : d.vertices()) {
    const int o = d.out_degree(v);
    const int i = d.in_degree(v);
    p.out_degree[v] = o;
    p.in_degree[v] = i;
    if (first) {
      p.min_out = p.max_out = o;
      p.min_in = p.max_in = i;
      first = false;
    } else {
      p.min_out = std::min(p.min_out, o);
      p.max_out = std::max(p.max_out, o);
      p.min_in = std::min(p.min_in, i);
      p.max_in = std::max(p.max_in, i);
    }
  }
  return p;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
  // Iterative Tarjan.
  const int n = d.capacity();
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root : d.vertices()) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto outs = d.out_neighbors(f.v);
      if (f.next < outs.size()) {
        const int w = outs[f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<int> strongly_connected_sink_component(const Digraph& d) {
  if (d.vertex_count() == 0) fail(ErrorKind::kDomain, "sink component of an empty digraph");
  const auto comps = strong_components(d);
  std::vector<int> comp_of(d.capacity(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  for (const auto& comp : comps) {
    bool sink = true;
    for (int v : comp) {
      for (int w : d.out_neighbors(v))
        if (comp_of[w] != comp_of[v]) {
          sink = false;
          break;
        }
      if (!sink) break;
    }
    if (sink) return comp;
  }
  fail(ErrorKind::kInvariantViolation, "condensation without a sink component");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<char> seen(g.capacity(), 0);
  std::vector<std::vector<int>> comps;
  for (int s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<int> comp{s}, queue{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int w : g.neighbors(queue[i]))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace cominor
