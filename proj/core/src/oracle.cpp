#include "cominor/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "cominor/error.hpp"
#include "cominor/iso.hpp"

namespace cominor {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

BudgetMeter::BudgetMeter(SearchBudget b) : budget_(b), start_(std::chrono::steady_clock::now()) {
  if (b.nodes <= 0 || b.ms <= 0) fail(ErrorKind::kDomain, "search budget must be positive");
}

bool BudgetMeter::tick() {
  if (exhausted_) return false;
  ++nodes_;
  if (nodes_ > budget_.nodes) exhausted_ = true;
  if ((nodes_ & 1023) == 0) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    if (ms > budget_.ms) exhausted_ = true;
  }
  return !exhausted_;
}

namespace {

template <class Cert>
OracleResult<Cert> finish(const BudgetMeter& meter, std::optional<Cert> cert) {
  OracleResult<Cert> r;
  r.nodes = meter.nodes();
  if (cert) {
    r.verdict = Verdict::kYes;
    r.certificate = std::move(cert);
  } else {
    r.verdict = meter.exhausted() ? Verdict::kBudgetExceeded : Verdict::kNo;
  }
  return r;
}

// Host vertices in breadth-first order, components by smallest member.
std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.capacity(), 0);
  for (int s : g.vertices()) {
    if (seen[s]) continue;
    seen[s] = 1;
    const std::size_t from = order.size();
    order.push_back(s);
    for (std::size_t i = from; i < order.size(); ++i)
      for (int w : g.neighbors(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  return order;
}

class MinorOracle {
 public:
  MinorOracle(const Graph& g, const Graph& h, BudgetMeter& meter)
      : g_(g), h_(h), meter_(meter), hv_(h.vertices()), order_(bfs_order(g)),
        k_(static_cast<int>(hv_.size())), label_(g.capacity(), -2) {
    cover_ = is_connected(g) && is_connected(h);
  }

  std::optional<MinorEmbedding> run() {
    if (k_ == 0) {
      MinorEmbedding mu;
      mu.branch_sets.resize(h_.capacity());
      return mu;
    }
    if (k_ > g_.vertex_count() || h_.edge_count() > g_.edge_count()) return std::nullopt;
    if (assign(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t idx, int used) {
    if (!meter_.tick()) return false;
    const int remaining = static_cast<int>(order_.size() - idx);
    if (remaining < k_ - used) return false;
    if (idx == order_.size()) return used == k_ && leaf();
    const int v = order_[idx];
    const int top = std::min(used + 1, k_);
    for (int l = 0; l < top; ++l) {
      label_[v] = l;
      if (closed_sets_connected(idx + 1) && assign(idx + 1, std::max(used, l + 1))) return true;
      if (meter_.exhausted()) break;
    }
    if (!cover_ && !meter_.exhausted()) {
      label_[v] = -1;
      if (assign(idx + 1, used)) return true;
    }
    label_[v] = -2;
    return false;
  }

  // Every label without unassigned neighbors must already be connected.
  bool closed_sets_connected(std::size_t assigned) const {
    std::vector<char> open(k_, 0), present(k_, 0);
    for (std::size_t i = 0; i < assigned; ++i) {
      const int v = order_[i];
      const int l = label_[v];
      if (l < 0) continue;
      present[l] = 1;
      for (int w : g_.neighbors(v))
        if (label_[w] == -2) open[l] = 1;
    }
    for (int l = 0; l < k_; ++l)
      if (present[l] && !open[l] && !connected(l, assigned)) return false;
    return true;
  }

  bool connected(int l, std::size_t assigned) const {
    int start = -1, members = 0;
    for (std::size_t i = 0; i < assigned; ++i)
      if (label_[order_[i]] == l) {
        ++members;
        if (start < 0) start = order_[i];
      }
    std::vector<char> seen(g_.capacity(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : g_.neighbors(v))
        if (!seen[w] && label_[w] == l) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return reached == members;
  }

  bool leaf() {
    for (int l = 0; l < k_; ++l)
      if (!connected(l, order_.size())) return false;
    Graph q(k_);
    for (const Edge& e : g_.edges()) {
      const int a = label_[e.u], b = label_[e.v];
      if (a >= 0 && b >= 0 && a != b && !q.has_edge(a, b)) q.add_edge(a, b);
    }
    if (q.edge_count() < h_.edge_count()) return false;
    Graph hc(k_);
    std::vector<int> pos(h_.capacity(), -1);
    for (int i = 0; i < k_; ++i) pos[hv_[i]] = i;
    for (const Edge& e : h_.edges()) hc.add_edge(pos[e.u], pos[e.v]);
    const auto m = find_subgraph_embedding(hc, q);
    if (!m) return false;
    MinorEmbedding mu;
    mu.branch_sets.resize(h_.capacity());
    for (int v : order_)
      if (label_[v] >= 0)
        for (int i = 0; i < k_; ++i)
          if ((*m)[i] == label_[v]) mu.branch_sets[hv_[i]].push_back(v);
    for (auto& b : mu.branch_sets) std::sort(b.begin(), b.end());
    found_ = std::move(mu);
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  BudgetMeter& meter_;
  std::vector<int> hv_;
  std::vector<int> order_;
  int k_;
  bool cover_ = false;
  std::vector<int> label_;
  MinorEmbedding found_;
};

}  // namespace

OracleResult<MinorEmbedding> oracle_minor(const Graph& g, const Graph& h, SearchBudget budget) {
  BudgetMeter meter(budget);
  MinorOracle o(g, h, meter);
  auto cert = o.run();
  return finish(meter, std::move(cert));
}

namespace {

struct UndirectedView {
  const Graph& g;
  int cap() const { return g.capacity(); }
  std::vector<int> vertices() const { return g.vertices(); }
  std::span<const int> out(int v) const { return g.neighbors(v); }
  bool fits(const Graph& h, int p, int v) const { return h.degree(p) <= g.degree(v); }
  static std::vector<Edge> pattern_arcs(const Graph& h) { return h.edges(); }
};

struct DirectedView {
  const Digraph& g;
  int cap() const { return g.capacity(); }
  std::vector<int> vertices() const { return g.vertices(); }
  std::span<const int> out(int v) const { return g.out_neighbors(v); }
  bool fits(const Digraph& h, int p, int v) const {
    return h.out_degree(p) <= g.out_degree(v) && h.in_degree(p) <= g.in_degree(v);
  }
  static std::vector<Edge> pattern_arcs(const Digraph& h) { return h.arcs(); }
};

template <class View, class Pattern>
class SubdivisionOracle {
 public:
  SubdivisionOracle(View host, const Pattern& h, BudgetMeter& meter)
      : host_(host), h_(h), meter_(meter), hv_(h.vertices()), arcs_(View::pattern_arcs(h)),
        branch_(h.capacity(), -1), used_(host.cap(), 0) {
    std::stable_sort(hv_.begin(), hv_.end(), [&](int a, int b) { return weight(a) > weight(b); });
  }

  std::optional<SubdivisionEmbedding> run() {
    if (hv_.size() > host_.vertices().size()) return std::nullopt;
    if (place(0)) return found_;
    return std::nullopt;
  }

 private:
  int weight(int p) const {
    int w = 0;
    for (const Edge& a : arcs_) w += (a.u == p) + (a.v == p);
    return w;
  }

  bool place(std::size_t i) {
    if (!meter_.tick()) return false;
    if (i == hv_.size()) return route(0);
    const int p = hv_[i];
    for (int v : host_.vertices()) {
      if (used_[v] || !host_.fits(h_, p, v)) continue;
      branch_[p] = v;
      used_[v] = 1;
      if (place(i + 1)) return true;
      used_[v] = 0;
      branch_[p] = -1;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  bool route(std::size_t i) {
    if (i == arcs_.size()) {
      SubdivisionEmbedding s;
      s.branch = branch_;
      for (std::size_t k = 0; k < arcs_.size(); ++k) s.paths.push_back({arcs_[k], paths_[k]});
      found_ = std::move(s);
      return true;
    }
    const int from = branch_[arcs_[i].u], to = branch_[arcs_[i].v];
    std::vector<int> path{from};
    return extend(i, path, to);
  }

  bool extend(std::size_t i, std::vector<int>& path, int to) {
    if (!meter_.tick()) return false;
    const int v = path.back();
    for (int w : host_.out(v)) {
      if (w == to) {
        path.push_back(w);
        paths_.push_back(path);
        if (route(i + 1)) return true;
        paths_.pop_back();
        path.pop_back();
        if (meter_.exhausted()) return false;
        break;
      }
    }
    for (int w : host_.out(v)) {
      if (used_[w]) continue;
      used_[w] = 1;
      path.push_back(w);
      if (extend(i, path, to)) return true;
      path.pop_back();
      used_[w] = 0;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  View host_;
  const Pattern& h_;
  BudgetMeter& meter_;
  std::vector<int> hv_;
  std::vector<Edge> arcs_;
  std::vector<int> branch_;
  std::vector<char> used_;
  std::vector<std::vector<int>> paths_;
  SubdivisionEmbedding found_;
};

}  // namespace

OracleResult<SubdivisionEmbedding> oracle_subdivision(const Graph& g, const Graph& h,
                                                      SearchBudget budget) {
  BudgetMeter meter(budget);
  SubdivisionOracle<UndirectedView, Graph> o(UndirectedView{g}, h, meter);
  auto cert = o.run();
  return finish(meter, std::move(cert));
}

OracleResult<SubdivisionEmbedding> oracle_subdivision(const Digraph& d, const Digraph& h,
                                                      SearchBudget budget) {
  BudgetMeter meter(budget);
  SubdivisionOracle<DirectedView, Digraph> o(DirectedView{d}, h, meter);
  auto cert = o.run();
  return finish(meter, std::move(cert));
}

namespace {

constexpr int kSmallMax = 7;

// Dense digraph on vertices 0..n-1; out[i] is a bitmask.
struct Small {
  int n = 0;
  std::array<std::uint8_t, kSmallMax> out{};

  int arcs() const {
    int m = 0;
    for (int i = 0; i < n; ++i) m += __builtin_popcount(out[i]);
    return m;
  }
  bool has(int u, int v) const { return (out[u] >> v) & 1; }
  int in_degree(int v) const {
    int d = 0;
    for (int i = 0; i < n; ++i) d += has(i, v);
    return d;
  }
};

Small to_small(const Digraph& d) {
  const auto vs = d.vertices();
  if (static_cast<int>(vs.size()) > kSmallMax)
    fail(ErrorKind::kDomain, "operation-sequence search supports at most 7 vertices");
  std::vector<int> pos(d.capacity(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  Small s;
  s.n = static_cast<int>(vs.size());
  for (const Edge& a : d.arcs()) s.out[pos[a.u]] |= static_cast<std::uint8_t>(1u << pos[a.v]);
  return s;
}

// Image of s under the vertex map f (f[i] < 0 drops i), loops removed.
Small relabel(const Small& s, const std::vector<int>& f, int n) {
  Small r;
  r.n = n;
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v)
      if (s.has(u, v) && f[u] >= 0 && f[v] >= 0 && f[u] != f[v])
        r.out[f[u]] |= static_cast<std::uint8_t>(1u << f[v]);
  return r;
}

Small delete_vertex(const Small& s, int x) {
  std::vector<int> f(s.n);
  for (int i = 0; i < s.n; ++i) f[i] = i < x ? i : (i == x ? -1 : i - 1);
  return relabel(s, f, s.n - 1);
}

Small contract(const Small& s, int u, int v) {
  const int keep = std::min(u, v), drop = std::max(u, v);
  std::vector<int> f(s.n);
  for (int i = 0; i < s.n; ++i) f[i] = i < drop ? i : (i == drop ? keep : i - 1);
  return relabel(s, f, s.n - 1);
}

std::uint64_t small_code(const Small& s) {
  std::vector<int> order(s.n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<int, int>> key(s.n);
  for (int i = 0; i < s.n; ++i) key[i] = {__builtin_popcount(s.out[i]), s.in_degree(i)};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) in order
  for (int i = 0; i < s.n;) {
    int j = i;
    while (j < s.n && key[order[j]] == key[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> pos(s.n);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < s.n; ++i) pos[order[i]] = i;
      std::uint64_t code = 0;
      for (int u = 0; u < s.n; ++u)
        for (int v = 0; v < s.n; ++v)
          if (s.has(u, v)) code |= std::uint64_t{1} << (pos[u] * s.n + pos[v]);
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do rec(b + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return (static_cast<std::uint64_t>(s.n) << 56) | best;
}

bool small_contains(const Small& host, const Small& p) {
  if (p.n > host.n) return false;
  std::vector<int> map(p.n, -1);
  std::uint32_t used = 0;
  std::function<bool(int)> rec = [&](int i) {
    if (i == p.n) return true;
    for (int v = 0; v < host.n; ++v) {
      if ((used >> v) & 1) continue;
      bool ok = !p.has(i, i) || host.has(v, v);
      for (int j = 0; j < i && ok; ++j)
        ok = (!p.has(i, j) || host.has(v, map[j])) && (!p.has(j, i) || host.has(map[j], v));
      if (!ok) continue;
      map[i] = v;
      used |= 1u << v;
      if (rec(i + 1)) return true;
      used &= ~(1u << v);
    }
    return false;
  };
  return rec(0);
}

class OperationSearch {
 public:
  OperationSearch(const Small& p, BudgetMeter& meter) : p_(p), arcs_(p.arcs()), meter_(meter) {}

  bool reachable(const Small& s) {
    if (s.n < p_.n || s.arcs() < arcs_) return false;
    if (small_contains(s, p_)) return true;
    const auto code = small_code(s);
    if (failed_.count(code)) return false;
    if (!meter_.tick()) return false;
    for (int x = 0; x < s.n; ++x)
      if (reachable(delete_vertex(s, x))) return true;
    for (int u = 0; u < s.n; ++u)
      for (int v = 0; v < s.n; ++v) {
        if (!s.has(u, v)) continue;
        Small t = s;
        t.out[u] &= static_cast<std::uint8_t>(~(1u << v));
        if (reachable(t)) return true;
        if (__builtin_popcount(s.out[u]) == 1 || s.in_degree(v) == 1)
          if (reachable(contract(s, u, v))) return true;
      }
    if (meter_.exhausted()) return false;
    failed_.insert(code);
    return false;
  }

 private:
  Small p_;
  int arcs_;
  BudgetMeter& meter_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

std::uint64_t canonical_code(const Digraph& d) { return small_code(to_small(d)); }

namespace {

using Mask = std::uint32_t;

struct BranchOption {
  Mask in_part = 0;
  int in_root = -1;
  int out_root = -1;
  Mask tails = 0;
  Mask heads = 0;
};

class BranchSetSearch {
 public:
  BranchSetSearch(const Digraph& d, const Digraph& h, BudgetMeter& meter)
      : d_(d), h_(h), meter_(meter), dv_(d.vertices()), hv_(h.vertices()),
        n_(static_cast<int>(dv_.size())), k_(static_cast<int>(hv_.size())) {
    if (n_ > 30) fail(ErrorKind::kDomain, "branch-set search supports at most 30 vertices");
    std::vector<int> pos(d.capacity(), -1);
    for (int i = 0; i < n_; ++i) pos[dv_[i]] = i;
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    for (const Edge& a : d.arcs()) {
      out_[pos[a.u]] |= Mask{1} << pos[a.v];
      in_[pos[a.v]] |= Mask{1} << pos[a.u];
    }
    std::vector<int> hpos(h.capacity(), -1);
    for (int i = 0; i < k_; ++i) hpos[hv_[i]] = i;
    for (const Edge& a : h.arcs()) parcs_.push_back({hpos[a.u], hpos[a.v]});
    label_.assign(n_, -1);
    sets_.assign(k_, 0);
  }

  std::optional<ButterflyEmbedding> run() {
    if (k_ > n_) return std::nullopt;
    if (label(0, k_)) return found_;
    return std::nullopt;
  }

 private:
  bool label(int i, int empty) {
    if (n_ - i < empty) return false;
    if (i == n_) return meter_.tick() && structures();
    for (int l = -1; l < k_; ++l) {
      label_[i] = l;
      const bool fresh = l >= 0 && sets_[l] == 0;
      if (l >= 0) sets_[l] |= Mask{1} << i;
      if (label(i + 1, empty - fresh)) return true;
      if (l >= 0) sets_[l] &= ~(Mask{1} << i);
      if (meter_.exhausted()) return false;
    }
    label_[i] = -1;
    return false;
  }

  bool arc_between(Mask a, Mask b) const {
    for (int u = 0; u < n_; ++u)
      if (((a >> u) & 1) && (out_[u] & b)) return true;
    return false;
  }

  // Vertices of `within` reaching `root` (backward) or reached from it.
  Mask closure(int root, Mask within, const std::vector<Mask>& step) const {
    Mask seen = Mask{1} << root, frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (int u = 0; u < n_; ++u)
        if ((frontier >> u) & 1) next |= step[u] & within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  const std::vector<BranchOption>& options(Mask x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    std::vector<BranchOption> opts;
    std::vector<std::pair<Mask, Mask>> seen;
    for (Mask in = x;; in = (in - 1) & x) {
      const Mask outp = x & ~in;
      std::vector<int> in_roots{-1}, out_roots{-1};
      if (in) {
        in_roots.clear();
        for (int r = 0; r < n_; ++r)
          if (((in >> r) & 1) && closure(r, in, in_) == in) in_roots.push_back(r);
      }
      if (outp) {
        out_roots.clear();
        for (int r = 0; r < n_; ++r)
          if (((outp >> r) & 1) && closure(r, outp, out_) == outp) out_roots.push_back(r);
      }
      for (int ri : in_roots)
        for (int ro : out_roots) {
          if (ri >= 0 && ro >= 0 && !((out_[ri] >> ro) & 1)) continue;
          BranchOption o{in, ri, ro, outp ? outp : Mask{1} << ri, in ? in : Mask{1} << ro};
          if (std::find(seen.begin(), seen.end(), std::pair(o.tails, o.heads)) != seen.end())
            continue;
          seen.push_back({o.tails, o.heads});
          opts.push_back(o);
        }
      if (in == 0) break;
    }
    return memo_.emplace(x, std::move(opts)).first->second;
  }

  bool structures() {
    for (const auto& [p, q] : parcs_)
      if (!arc_between(sets_[p], sets_[q])) return false;
    chosen_.assign(k_, nullptr);
    return choose(0);
  }

  bool choose(int p) {
    if (p == k_) {
      build();
      return true;
    }
    for (const auto& o : options(sets_[p])) {
      chosen_[p] = &o;
      bool ok = true;
      for (const auto& [a, b] : parcs_) {
        if (a > p || b > p || (a != p && b != p)) continue;
        if (!arc_between(chosen_[a]->tails, chosen_[b]->heads)) {
          ok = false;
          break;
        }
      }
      if (ok && choose(p + 1)) return true;
    }
    chosen_[p] = nullptr;
    return false;
  }

  void build() {
    ButterflyEmbedding e;
    e.branch.resize(h_.capacity());
    for (int p = 0; p < k_; ++p) {
      const BranchOption& o = *chosen_[p];
      auto& b = e.branch[hv_[p]];
      const Mask in = o.in_part, outp = sets_[p] & ~in;
      for (int v = 0; v < n_; ++v) {
        if ((in >> v) & 1) b.in_part.push_back(dv_[v]);
        if ((outp >> v) & 1) b.out_part.push_back(dv_[v]);
      }
      if (o.in_root >= 0) {
        b.in_root = dv_[o.in_root];
        tree(o.in_root, in, in_, true, b.arcs);
      }
      if (o.out_root >= 0) {
        b.out_root = dv_[o.out_root];
        tree(o.out_root, outp, out_, false, b.arcs);
      }
      if (o.in_root >= 0 && o.out_root >= 0) b.arcs.push_back({dv_[o.in_root], dv_[o.out_root]});
    }
    for (std::size_t i = 0; i < parcs_.size(); ++i) {
      const auto [p, q] = parcs_[i];
      const Mask tails = chosen_[p]->tails, heads = chosen_[q]->heads;
      for (int u = 0; u < n_; ++u) {
        const Mask hit = ((tails >> u) & 1) ? (out_[u] & heads) : 0;
        if (hit) {
          e.realization.push_back({Edge{hv_[p], hv_[q]}, Edge{dv_[u], dv_[__builtin_ctz(hit)]}});
          break;
        }
      }
    }
    found_ = std::move(e);
  }

  // Breadth-first arborescence; backward arcs point toward the root.
  void tree(int root, Mask within, const std::vector<Mask>& step, bool backward,
            std::vector<Edge>& arcs) const {
    Mask seen = Mask{1} << root;
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int w = 0; w < n_; ++w)
        if (((step[u] & within & ~seen) >> w) & 1) {
          seen |= Mask{1} << w;
          queue.push_back(w);
          arcs.push_back(backward ? Edge{dv_[w], dv_[u]} : Edge{dv_[u], dv_[w]});
        }
    }
  }

  const Digraph& d_;
  const Digraph& h_;
  BudgetMeter& meter_;
  std::vector<int> dv_, hv_;
  int n_, k_;
  std::vector<Mask> out_, in_;
  std::vector<std::pair<int, int>> parcs_;
  std::vector<int> label_;
  std::vector<Mask> sets_;
  std::map<Mask, std::vector<BranchOption>> memo_;
  std::vector<const BranchOption*> chosen_;
  ButterflyEmbedding found_;
};

}  // namespace

OracleResult<ButterflyEmbedding> oracle_butterfly(const Digraph& d, const Digraph& h,
                                                  SearchBudget budget, ButterflyMode mode) {
  BudgetMeter meter(budget);
  if (mode == ButterflyMode::kBranchSet) {
    BranchSetSearch s(d, h, meter);
    auto cert = s.run();
    return finish(meter, std::move(cert));
  }
  OperationSearch s(to_small(h), meter);
  const bool yes = s.reachable(to_small(d));
  auto r = finish<ButterflyEmbedding>(meter, std::nullopt);
  if (yes) r.verdict = Verdict::kYes;
  return r;
}

}  // namespace cominor
