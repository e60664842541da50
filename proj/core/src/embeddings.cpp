#include "cominor/embeddings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

namespace cominor {

namespace {

std::string vs(int v) { return std::to_string(v); }

bool connected_within(const Graph& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::set<int> in(set.begin(), set.end());
  std::vector<int> queue{set.front()};
  std::set<int> seen{set.front()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int w : g.neighbors(queue[k]))
      if (in.count(w) && seen.insert(w).second) queue.push_back(w);
  return seen.size() == in.size();
}

template <class G>
Check subdivision_common(const G& host, const G& pattern, const SubdivisionEmbedding& s,
                         const std::vector<Edge>& pattern_edges, bool directed) {
  if (static_cast<int>(s.branch.size()) != pattern.capacity())
    return Check::failure("branch map size differs from pattern capacity");
  std::map<int, int> owner;  // host vertex -> pattern vertex
  for (int p = 0; p < pattern.capacity(); ++p) {
    if (!pattern.is_live(p)) {
      if (s.branch[p] != -1) return Check::failure("dead pattern vertex " + vs(p) + " is mapped");
      continue;
    }
    const int h = s.branch[p];
    if (!host.is_live(h)) return Check::failure("branch vertex of " + vs(p) + " not in host");
    if (!owner.emplace(h, p).second) return Check::failure("branch map is not injective");
  }
  std::set<Edge> want(pattern_edges.begin(), pattern_edges.end());
  std::set<Edge> got;
  std::set<int> used_internal;
  for (const auto& [e, path] : s.paths) {
    if (!want.count(e)) return Check::failure("path for a non-edge " + vs(e.u) + "," + vs(e.v));
    if (!got.insert(e).second) return Check::failure("two paths for one pattern edge");
    if (path.size() < 2) return Check::failure("path too short");
    const int a = s.branch[e.u], b = s.branch[e.v];
    const bool forward = path.front() == a && path.back() == b;
    const bool backward = !directed && path.front() == b && path.back() == a;
    if (!forward && !backward) return Check::failure("path endpoints do not match branch vertices");
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      bool step;
      if constexpr (std::is_same_v<G, Graph>) step = host.has_edge(path[k], path[k + 1]);
      else step = host.has_arc(path[k], path[k + 1]);
      if (!step) return Check::failure("path uses a missing host edge");
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      if (owner.count(path[k])) return Check::failure("path passes through a branch vertex");
      if (!used_internal.insert(path[k]).second)
        return Check::failure("paths are not internally disjoint");
    }
  }
  if (got.size() != want.size()) return Check::failure("pattern edge without a path");
  return {};
}

}  // namespace

std::vector<int> ButterflyBranch::vertices() const {
  std::vector<int> out = in_part;
  out.insert(out.end(), out_part.begin(), out_part.end());
  std::sort(out.begin(), out.end());
  return out;
}

Check verify_minor(const Graph& g, const Graph& pattern, const MinorEmbedding& mu) {
  if (static_cast<int>(mu.branch_sets.size()) != pattern.capacity())
    return Check::failure("branch set count differs from pattern capacity");
  std::vector<int> owner(g.capacity(), -1);
  for (int p = 0; p < pattern.capacity(); ++p) {
    const auto& set = mu.branch_sets[p];
    if (!pattern.is_live(p)) {
      if (!set.empty()) return Check::failure("dead pattern vertex " + vs(p) + " has a branch set");
      continue;
    }
    if (set.empty()) return Check::failure("branch set of " + vs(p) + " is empty");
    for (int v : set) {
      if (!g.is_live(v)) return Check::failure("branch set of " + vs(p) + " leaves the host");
      if (owner[v] != -1) return Check::failure("branch sets overlap at host vertex " + vs(v));
      owner[v] = p;
    }
    if (!connected_within(g, set)) return Check::failure("branch set of " + vs(p) + " is disconnected");
  }
  for (Edge e : pattern.edges()) {
    bool hit = false;
    for (int a : mu.branch_sets[e.u]) {
      for (int b : g.neighbors(a))
        if (owner[b] == e.v) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit) return Check::failure("pattern edge " + vs(e.u) + "-" + vs(e.v) + " not covered");
  }
  if (mu.apex >= 0) {
    if (!pattern.is_live(mu.apex)) return Check::failure("apex is not a pattern vertex");
    if (mu.branch_sets[mu.apex].size() != 1) return Check::failure("apex branch set is not a singleton");
  }
  return {};
}

Check verify_subdivision(const Graph& g, const Graph& pattern, const SubdivisionEmbedding& s) {
  return subdivision_common(g, pattern, s, pattern.edges(), false);
}

Check verify_subdivision(const Digraph& d, const Digraph& pattern, const SubdivisionEmbedding& s) {
  return subdivision_common(d, pattern, s, pattern.arcs(), true);
}

Check verify_butterfly(const Digraph& d, const Digraph& pattern, const ButterflyEmbedding& b) {
  if (static_cast<int>(b.branch.size()) != pattern.capacity())
    return Check::failure("branch count differs from pattern capacity");
  std::vector<int> owner(d.capacity(), -1);
  for (int p = 0; p < pattern.capacity(); ++p) {
    const auto& br = b.branch[p];
    const std::string who = "branch set of " + vs(p);
    if (!pattern.is_live(p)) {
      if (!br.in_part.empty() || !br.out_part.empty())
        return Check::failure("dead pattern vertex " + vs(p) + " has a branch set");
      continue;
    }
    if (br.in_part.empty() && br.out_part.empty()) return Check::failure(who + " is empty");
    std::vector<char> part(d.capacity(), 0);  // 1 in, 2 out
    for (int v : br.in_part) {
      if (!d.is_live(v)) return Check::failure(who + " leaves the host");
      if (owner[v] != -1) return Check::failure("branch sets overlap at host vertex " + vs(v));
      owner[v] = p;
      part[v] = 1;
    }
    for (int v : br.out_part) {
      if (!d.is_live(v)) return Check::failure(who + " leaves the host");
      if (owner[v] != -1) return Check::failure("branch sets overlap at host vertex " + vs(v));
      owner[v] = p;
      part[v] = 2;
    }
    if (br.in_part.empty() != (br.in_root < 0) ||
        (br.in_root >= 0 && (!d.is_live(br.in_root) || part[br.in_root] != 1)))
      return Check::failure(who + " has a bad in-root");
    if (br.out_part.empty() != (br.out_root < 0) ||
        (br.out_root >= 0 && (!d.is_live(br.out_root) || part[br.out_root] != 2)))
      return Check::failure(who + " has a bad out-root");
    std::map<int, int> parent_in, parent_out;  // child -> parent
    bool bridge = false;
    for (Edge a : br.arcs) {
      if (!d.is_live(a.u) || !d.is_live(a.v) || !d.has_arc(a.u, a.v))
        return Check::failure(who + " uses a missing host arc");
      if (part[a.u] == 1 && part[a.v] == 1) {
        if (a.u == br.in_root || !parent_in.emplace(a.u, a.v).second)
          return Check::failure(who + ": in-part is not an in-arborescence");
      } else if (part[a.u] == 2 && part[a.v] == 2) {
        if (a.v == br.out_root || !parent_out.emplace(a.v, a.u).second)
          return Check::failure(who + ": out-part is not an out-arborescence");
      } else if (a.u == br.in_root && a.v == br.out_root && !bridge) {
        bridge = true;
      } else {
        return Check::failure(who + " has an arc outside its structure");
      }
    }
    if (parent_in.size() + 1 != br.in_part.size() && !br.in_part.empty())
      return Check::failure(who + ": in-part is not spanned by its arcs");
    if (parent_out.size() + 1 != br.out_part.size() && !br.out_part.empty())
      return Check::failure(who + ": out-part is not spanned by its arcs");
    auto reaches = [](const std::map<int, int>& up, int start, int root, std::size_t limit) {
      int v = start;
      for (std::size_t k = 0; k <= limit; ++k) {
        if (v == root) return true;
        auto it = up.find(v);
        if (it == up.end()) return false;
        v = it->second;
      }
      return false;
    };
    for (int v : br.in_part)
      if (!reaches(parent_in, v, br.in_root, br.in_part.size()))
        return Check::failure(who + ": in-part does not reach its root");
    for (int v : br.out_part)
      if (!reaches(parent_out, v, br.out_root, br.out_part.size()))
        return Check::failure(who + ": out-part is not reached from its root");
    if (!br.in_part.empty() && !br.out_part.empty() && !bridge)
      return Check::failure(who + " lacks the bridge arc");
  }
  std::set<Edge> want;
  for (Edge e : pattern.arcs()) want.insert(e);
  std::set<Edge> got;
  for (const auto& [pe, he] : b.realization) {
    if (!want.count(pe)) return Check::failure("realization of a non-arc");
    if (!got.insert(pe).second) return Check::failure("pattern arc realized twice");
    if (!d.is_live(he.u) || !d.is_live(he.v) || !d.has_arc(he.u, he.v))
      return Check::failure("realization uses a missing host arc");
    const auto& bu = b.branch[pe.u];
    const auto& bv = b.branch[pe.v];
    const bool tail_ok = bu.out_part.empty()
                             ? he.u == bu.in_root
                             : std::count(bu.out_part.begin(), bu.out_part.end(), he.u) > 0;
    const bool head_ok = bv.in_part.empty()
                             ? he.v == bv.out_root
                             : std::count(bv.in_part.begin(), bv.in_part.end(), he.v) > 0;
    if (!tail_ok) return Check::failure("arc " + vs(pe.u) + "->" + vs(pe.v) + " does not leave the out-part");
    if (!head_ok) return Check::failure("arc " + vs(pe.u) + "->" + vs(pe.v) + " does not enter the in-part");
  }
  if (got.size() != want.size()) return Check::failure("pattern arc without realization");
  if (b.apex >= 0) {
    if (!pattern.is_live(b.apex)) return Check::failure("apex is not a pattern vertex");
    if (b.branch[b.apex].vertices().size() != 1) return Check::failure("apex branch set is not a singleton");
  }
  return {};
}

Digraph directed_wheel_plus(int t) {
  if (t < 2) fail(ErrorKind::kDomain, "wheel: need t >= 2");
  Digraph d(t + 1);
  for (int i = 0; i < t; ++i) {
    d.add_arc(i, (i + 1) % t);
    d.add_arc(t, i);
  }
  return d;
}

Digraph directed_wheel_w1(int t) {
  Digraph d = directed_wheel_plus(t);
  d.add_arc(0, t);
  return d;
}

Digraph directed_wheel_w2(int t) {
  Digraph d = directed_wheel_plus(t);
  d.remove_arc(t, 0);
  d.add_arc(0, t);
  return d;
}

ButterflyEmbedding restrict_butterfly(const ButterflyEmbedding& b, const Digraph& sub) {
  ButterflyEmbedding out = b;
  out.realization.clear();
  for (const auto& r : b.realization)
    if (sub.is_live(r.first.u) && sub.is_live(r.first.v) && sub.has_arc(r.first.u, r.first.v))
      out.realization.push_back(r);
  return out;
}

SubdivisionEmbedding restrict_subdivision(const SubdivisionEmbedding& s, const Digraph& sub) {
  SubdivisionEmbedding out;
  out.tag = s.tag;
  out.branch.assign(sub.capacity(), -1);
  for (int p : sub.vertices()) out.branch[p] = s.branch[p];
  for (const auto& pr : s.paths)
    if (sub.is_live(pr.first.u) && sub.is_live(pr.first.v) && sub.has_arc(pr.first.u, pr.first.v))
      out.paths.push_back(pr);
  return out;
}

}  // namespace cominor
