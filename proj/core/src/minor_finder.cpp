#include "cominor/minor_finder.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cominor/connectivity.hpp"

namespace cominor {

Graph ReductionLog::replay(const Graph& original) const {
  Graph g = original;
  for (const auto& st : steps) {
    if (st.kind == ReductionStep::Kind::kDeleteVertex) g.remove_vertex(st.a);
    else g = contract_edge(g, undirected(st.a, st.b));
  }
  return g;
}

namespace {

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const OrderingScheme& scheme)
      : scheme_(scheme), h_(scheme.host()), g_(g), blob_(g.capacity()), in_s_(g.capacity(), 0) {
    for (int v : g.vertices()) blob_[v] = {v};
    t_ = h_.vertex_count();
    n_ = g.vertex_count();
    omega_ = scheme.initial();
  }

  ApexMinorResult run() {
    const long bound = static_cast<long>(n_) * (n_ + t_);
    while (true) {
      if (++stats_.steps > bound) violation("step bound exceeded");
      check_embedding();
      const int s = static_cast<int>(phi_.size());
      if (s == t_) return finish();
      if (reduce_separation()) continue;
      const auto nb = earlier_neighbor_positions(h_, omega_, s);
      if (nb.empty()) {
        add(smallest_outside([](int) { return true; }));
      } else if (nb.size() == 1) {
        const int a = phi_[nb[0]];
        const int v = smallest_outside([&](int x) { return g_.has_edge(x, a); });
        if (v < 0) violation("no neighbor outside S for a single attachment");
        add(v);
      } else {
        const int a = phi_[nb[0]], b = phi_[nb[1]];
        const int v = smallest_outside([&](int x) { return g_.has_edge(x, a) && g_.has_edge(x, b); });
        if (v >= 0) add(v);
        else contract_pair(s, nb[0], nb[1]);
      }
    }
  }

 private:
  template <class Pred>
  int smallest_outside(Pred pred) const {
    for (int v : g_.vertices())
      if (!in_s_[v] && pred(v)) return v;
    return -1;
  }

  std::vector<int> s_list() const { return phi_; }

  void add(int v) {
    if (v < 0) violation("no vertex left outside S");
    phi_.push_back(v);
    in_s_[v] = 1;
    ++stats_.additions;
  }

  int contract(int a, int b) {
    ContractionDelta delta;
    g_ = contract_edge(g_, undirected(a, b), delta);
    log_.steps.push_back({ReductionStep::Kind::kContract, delta.survivor, delta.removed});
    auto& into = blob_[delta.survivor];
    into.insert(into.end(), blob_[delta.removed].begin(), blob_[delta.removed].end());
    blob_[delta.removed].clear();
    in_s_[delta.survivor] = in_s_[delta.survivor] || in_s_[delta.removed];
    in_s_[delta.removed] = 0;
    return delta.survivor;
  }

  void remove(int v) {
    g_.remove_vertex(v);
    log_.steps.push_back({ReductionStep::Kind::kDeleteVertex, v, -1});
    blob_[v].clear();
    in_s_[v] = 0;
  }

  bool reduce_separation() {
    const int s = static_cast<int>(phi_.size());
    const auto sep = bounded_order_separation(g_, phi_, s);
    if (!sep) return false;
    ++stats_.separations;
    const auto x = sep->separator();
    if (static_cast<int>(x.size()) != s) violation("separation of order below |S|");
    const auto link = disjoint_linkage(g_, phi_, x, true);
    if (!link.complete()) violation("no linkage from S to the separator");
    std::vector<char> on_path(g_.capacity(), 0);
    for (const auto& p : link.paths)
      for (int v : p) on_path[v] = 1;
    const std::vector<int> b_side = sep->b;
    for (int v : sep->a)
      if (!on_path[v] && !std::binary_search(b_side.begin(), b_side.end(), v)) remove(v);
    for (int k = 0; k < s; ++k) {
      const auto& p = link.paths[k];
      int cur = p.front();
      in_s_[cur] = 1;
      for (std::size_t q = 1; q < p.size(); ++q) cur = contract(cur, p[q]);
      phi_[k] = cur;
    }
    return true;
  }

  void contract_pair(int s, int i, int j) {
    const int a = phi_[i], b = phi_[j];
    if (!g_.has_edge(a, b)) violation("images of an ordering edge are not adjacent");
    const int merged = contract(a, b);
    ++stats_.contractions;
    const auto r = scheme_.replace(omega_, s, i, j);
    if (!check_replacement(h_, scheme_.root(), omega_, s, i, j, r))
      violation("scheme returned an invalid replacement");
    std::map<int, int> pos;
    for (int p = 0; p < s; ++p) pos[omega_[p]] = p;
    const int merged_label = std::min(omega_[i], omega_[j]);
    std::map<int, int> phi_map(r.phi.begin(), r.phi.end());
    std::vector<int> next(s - 1);
    for (int k = 0; k + 1 < s; ++k) {
      const int label = phi_map.at(r.ordering[k]);
      next[k] = label == merged_label ? merged : phi_[pos.at(label)];
    }
    phi_ = std::move(next);
    omega_ = r.ordering;
  }

  void check_embedding() const {
    const int s = static_cast<int>(phi_.size());
    for (int p = 0; p < s; ++p) {
      if (!g_.is_live(phi_[p]) || !in_s_[phi_[p]]) violation("S image lost");
      for (int q = p + 1; q < s; ++q)
        if (h_.has_edge(omega_[p], omega_[q]) && !g_.has_edge(phi_[p], phi_[q]))
          violation("G[S] no longer contains the ordering prefix");
    }
  }

  ApexMinorResult finish() {
    const int v = smallest_outside([](int) { return true; });
    if (v < 0) violation("S covers the whole graph");
    const auto fan = max_fan(g_, v, phi_);
    if (static_cast<int>(fan.fan.paths.size()) != t_) violation("fan from the apex is too small");
    ApexMinorResult res;
    res.pattern = add_apex(h_);
    const int apex = h_.capacity();
    res.embedding.branch_sets.assign(res.pattern.capacity(), {});
    res.embedding.apex = apex;
    std::map<int, int> label_at;
    for (int p = 0; p < t_; ++p) label_at[phi_[p]] = omega_[p];
    for (const auto& path : fan.fan.paths) {
      auto& set = res.embedding.branch_sets[label_at.at(path.back())];
      for (std::size_t q = 1; q < path.size(); ++q)
        set.insert(set.end(), blob_[path[q]].begin(), blob_[path[q]].end());
      std::sort(set.begin(), set.end());
    }
    if (blob_[v].size() != 1) violation("apex vertex was merged");
    res.embedding.branch_sets[apex] = blob_[v];
    res.log = log_;
    res.reduced = g_;
    res.stats = stats_;
    return res;
  }

  [[noreturn]] void violation(const std::string& what) const {
    std::ostringstream os;
    os << "find_apex_minor: " << what << " [s=" << phi_.size() << " |V(G)|=" << g_.vertex_count()
       << " omega=";
    for (int w : omega_) os << w << ' ';
    os << "phi=";
    for (int p : phi_) os << p << ' ';
    os << "step=" << stats_.steps << ']';
    fail(ErrorKind::kInvariantViolation, os.str());
  }

  const OrderingScheme& scheme_;
  const Graph& h_;
  Graph g_;
  std::vector<std::vector<int>> blob_;
  std::vector<char> in_s_;
  std::vector<int> phi_;
  Ordering omega_;
  ReductionLog log_;
  MinorFinderStats stats_;
  int t_ = 0;
  int n_ = 0;
};

}  // namespace

ApexMinorResult find_apex_minor(const Graph& g, const OrderingScheme& scheme) {
  const int t = scheme.host().vertex_count();
  if (g.vertex_count() == 0 || degree_profile(g).min_degree < t)
    fail(ErrorKind::kHypothesis, "find_apex_minor: minimum degree below |V(H)|");
  return MinorSearch(g, scheme).run();
}

}  // namespace cominor
