#include <algorithm>
#include <map>
#include <set>

#include "cominor/embeddings.hpp"

namespace cominor {

namespace {

// BFS tree of g restricted to `set`, rooted at its smallest vertex.
struct SetTree {
  std::map<int, int> parent;
  std::map<int, int> depth;

  SetTree(const Graph& g, const std::vector<int>& set) {
    std::set<int> in(set.begin(), set.end());
    const int root = *in.begin();
    parent[root] = -1;
    depth[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int w : g.neighbors(queue[k]))
        if (in.count(w) && !parent.count(w)) {
          parent[w] = queue[k];
          depth[w] = depth[queue[k]] + 1;
          queue.push_back(w);
        }
  }

  int lca(int a, int b) const {
    while (depth.at(a) > depth.at(b)) a = parent.at(a);
    while (depth.at(b) > depth.at(a)) b = parent.at(b);
    while (a != b) {
      a = parent.at(a);
      b = parent.at(b);
    }
    return a;
  }

  // Tree path from a to b.
  std::vector<int> path(int a, int b) const {
    const int m = lca(a, b);
    std::vector<int> left, right;
    for (int v = a; v != m; v = parent.at(v)) left.push_back(v);
    left.push_back(m);
    for (int v = b; v != m; v = parent.at(v)) right.push_back(v);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }

  int median(const std::vector<int>& terminals) const {
    if (terminals.size() == 1) return terminals[0];
    if (terminals.size() == 2) return terminals[0];
    const int x = lca(terminals[0], terminals[1]);
    const int y = lca(terminals[0], terminals[2]);
    const int z = lca(terminals[1], terminals[2]);
    int best = x;
    for (int c : {y, z})
      if (depth.at(c) > depth.at(best)) best = c;
    return best;
  }
};

}  // namespace

SubdivisionEmbedding minor_to_subdivision(const Graph& g, const Graph& pattern,
                                          const MinorEmbedding& mu) {
  if (static_cast<int>(mu.branch_sets.size()) != pattern.capacity())
    fail(ErrorKind::kDomain, "minor_to_subdivision: model does not match pattern");
  std::vector<int> owner(g.capacity(), -1);
  for (int p : pattern.vertices()) {
    for (int v : mu.branch_sets[p]) owner[v] = p;
    if (pattern.degree(p) >= 4 && mu.branch_sets[p].size() != 1)
      fail(ErrorKind::kHypothesis, "minor_to_subdivision: branch set at a degree >= 4 vertex is not a singleton");
  }
  // Attachment host edge per pattern edge: smallest (a, b) with a in μ(u), b in μ(v).
  std::map<Edge, Edge> attach;
  for (Edge e : pattern.edges()) {
    auto set = mu.branch_sets[e.u];
    std::sort(set.begin(), set.end());
    bool done = false;
    for (int a : set) {
      for (int b : g.neighbors(a))
        if (owner[b] == e.v) {
          attach[e] = {a, b};
          done = true;
          break;
        }
      if (done) break;
    }
    if (!done) fail(ErrorKind::kDomain, "minor_to_subdivision: pattern edge not covered");
  }
  SubdivisionEmbedding out;
  out.branch.assign(pattern.capacity(), -1);
  std::map<int, SetTree> trees;
  for (int p : pattern.vertices()) {
    trees.emplace(p, SetTree(g, mu.branch_sets[p]));
    std::vector<int> terminals;
    for (const auto& [e, h] : attach) {
      if (e.u == p) terminals.push_back(h.u);
      if (e.v == p) terminals.push_back(h.v);
    }
    if (terminals.empty()) {
      out.branch[p] = *std::min_element(mu.branch_sets[p].begin(), mu.branch_sets[p].end());
      continue;
    }
    // Duplicate terminals force the median onto the duplicate.
    std::sort(terminals.begin(), terminals.end());
    int dup = -1;
    for (std::size_t k = 1; k < terminals.size(); ++k)
      if (terminals[k] == terminals[k - 1]) dup = terminals[k];
    if (terminals.size() > 3) out.branch[p] = terminals[0];
    else out.branch[p] = dup >= 0 ? dup : trees.at(p).median(terminals);
  }
  for (const auto& [e, h] : attach) {
    auto left = trees.at(e.u).path(out.branch[e.u], h.u);
    auto right = trees.at(e.v).path(h.v, out.branch[e.v]);
    left.insert(left.end(), right.begin(), right.end());
    out.paths.emplace_back(e, std::move(left));
  }
  return out;
}

namespace {

// Paths through a butterfly branch set towards and away from its centre:
// the out-root when there is an out-part, else the in-root.
struct BranchRoutes {
  std::map<int, int> up;    // in-part child -> parent
  std::map<int, int> down;  // out-part child -> parent
  const ButterflyBranch& br;

  explicit BranchRoutes(const ButterflyBranch& b) : br(b) {
    std::set<int> in(b.in_part.begin(), b.in_part.end());
    std::set<int> out(b.out_part.begin(), b.out_part.end());
    for (Edge a : b.arcs) {
      if (in.count(a.u) && in.count(a.v)) up[a.u] = a.v;
      if (out.count(a.u) && out.count(a.v)) down[a.v] = a.u;
    }
  }

  int centre() const { return br.out_part.empty() ? br.in_root : br.out_root; }

  // Directed path from an arc head to the centre.
  std::vector<int> inward(int head) const {
    std::vector<int> p{head};
    if (head == br.out_root && !br.out_part.empty()) return p;
    while (p.back() != br.in_root) p.push_back(up.at(p.back()));
    if (!br.out_part.empty()) p.push_back(br.out_root);
    return p;
  }

  // Directed path from the centre to an arc tail.
  std::vector<int> outward(int tail) const {
    std::vector<int> p{tail};
    if (br.out_part.empty()) return p;
    while (p.back() != br.out_root) p.push_back(down.at(p.back()));
    std::reverse(p.begin(), p.end());
    return p;
  }
};

}  // namespace

SubdivisionEmbedding butterfly_to_subdivision(const Digraph& d, const Digraph& pattern,
                                              const ButterflyEmbedding& b) {
  (void)d;
  if (static_cast<int>(b.branch.size()) != pattern.capacity())
    fail(ErrorKind::kDomain, "butterfly_to_subdivision: model does not match pattern");
  SubdivisionEmbedding out;
  out.branch.assign(pattern.capacity(), -1);
  std::map<int, std::vector<std::pair<Edge, int>>> incoming, outgoing;  // pattern arc, host end
  for (const auto& [pe, he] : b.realization) {
    outgoing[pe.u].emplace_back(pe, he.u);
    incoming[pe.v].emplace_back(pe, he.v);
  }
  std::map<Edge, std::vector<int>> tail_seg, head_seg;
  for (int p : pattern.vertices()) {
    const auto& br = b.branch[p];
    const auto& ins = incoming[p];
    const auto& outs = outgoing[p];
    const bool single = br.vertices().size() == 1;
    const bool subcubic = ins.size() + outs.size() <= 3 && ins.size() <= 2 && outs.size() <= 2;
    if (single) {
      const int v = br.vertices()[0];
      out.branch[p] = v;
      for (const auto& [pe, h] : ins) head_seg[pe] = {v};
      for (const auto& [pe, h] : outs) tail_seg[pe] = {v};
      continue;
    }
    if (!subcubic)
      fail(ErrorKind::kHypothesis, "butterfly_to_subdivision: non-subcubic vertex with a large branch set");
    const BranchRoutes routes(br);
    if (ins.size() == 2) {
      const auto p1 = routes.inward(ins[0].second);
      const auto p2 = routes.inward(ins[1].second);
      int meet = -1;
      std::size_t cut1 = 0, cut2 = 0;
      for (std::size_t a = 0; a < p1.size() && meet < 0; ++a)
        for (std::size_t c = 0; c < p2.size(); ++c)
          if (p1[a] == p2[c]) {
            meet = p1[a];
            cut1 = a;
            cut2 = c;
            break;
          }
      out.branch[p] = meet;
      head_seg[ins[0].first] = std::vector<int>(p1.begin(), p1.begin() + cut1 + 1);
      head_seg[ins[1].first] = std::vector<int>(p2.begin(), p2.begin() + cut2 + 1);
      for (const auto& [pe, t] : outs) {
        std::vector<int> seg(p1.begin() + cut1, p1.end());
        const auto rest = routes.outward(t);
        seg.insert(seg.end(), rest.begin() + 1, rest.end());
        tail_seg[pe] = seg;
      }
      continue;
    }
    if (outs.size() == 2) {
      const auto q1 = routes.outward(outs[0].second);
      const auto q2 = routes.outward(outs[1].second);
      std::size_t k = 0;
      while (k + 1 < q1.size() && k + 1 < q2.size() && q1[k + 1] == q2[k + 1]) ++k;
      out.branch[p] = q1[k];
      tail_seg[outs[0].first] = std::vector<int>(q1.begin() + k, q1.end());
      tail_seg[outs[1].first] = std::vector<int>(q2.begin() + k, q2.end());
      for (const auto& [pe, h] : ins) {
        auto seg = routes.inward(h);
        seg.insert(seg.end(), q1.begin() + 1, q1.begin() + k + 1);
        head_seg[pe] = seg;
      }
      continue;
    }
    out.branch[p] = routes.centre();
    for (const auto& [pe, h] : ins) head_seg[pe] = routes.inward(h);
    for (const auto& [pe, t] : outs) tail_seg[pe] = routes.outward(t);
  }
  for (const auto& [pe, he] : b.realization) {
    auto path = tail_seg.at(pe);
    const auto& tail = head_seg.at(pe);
    path.insert(path.end(), tail.begin(), tail.end());
    out.paths.emplace_back(pe, std::move(path));
  }
  return out;
}

}  // namespace cominor
