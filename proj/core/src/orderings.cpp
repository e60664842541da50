#include "cominor/orderings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cominor/iso.hpp"

namespace cominor {

OrderingScheme::OrderingScheme(Graph host, Root root) : host_(std::move(host)), root_(std::move(root)) {
  if (root_.size() > 2) fail(ErrorKind::kDomain, "root has more than two entries");
  for (int r : root_)
    if (!host_.is_live(r)) fail(ErrorKind::kDomain, "root vertex not in host");
  if (root_.size() == 2 && root_[0] == root_[1]) fail(ErrorKind::kDomain, "root entries repeat");
}

Replacement OrderingScheme::replace(const Ordering& omega, int s, int i, int j) const {
  const int t = static_cast<int>(omega.size());
  if (t != host_.vertex_count() || s < 2 || s >= t)
    fail(ErrorKind::kContractStep, name() + ": step out of range");
  if (i > j) std::swap(i, j);
  const auto nb = earlier_neighbor_positions(host_, omega, s);
  if (nb.size() != 2 || nb[0] != i || nb[1] != j)
    fail(ErrorKind::kContractStep, name() + ": incoming vertex is not adjacent to exactly the pair");
  if (s == 2) return {omega, {{omega[0], std::min(omega[0], omega[1])}}};
  return replace_step(omega, s, i, j);
}

std::vector<ContractibleEdge> OrderingScheme::contractible_edges() const {
  return last_vertex_edges(host_, initial());
}

bool is_permutation_of(const Graph& h, const Ordering& omega) {
  auto sorted = omega;
  std::sort(sorted.begin(), sorted.end());
  return sorted == h.vertices();
}

std::vector<int> earlier_neighbor_positions(const Graph& h, const Ordering& omega, int s) {
  std::vector<int> out;
  for (int p = 0; p < s; ++p)
    if (h.has_edge(omega[s], omega[p])) out.push_back(p);
  return out;
}

bool is_recursive_ordering(const Graph& h, const Ordering& omega) {
  if (!is_permutation_of(h, omega)) return false;
  for (int s = 1; s < static_cast<int>(omega.size()); ++s) {
    const auto nb = earlier_neighbor_positions(h, omega, s);
    if (nb.size() > 2) return false;
    if (nb.size() == 2 && !h.has_edge(omega[nb[0]], omega[nb[1]])) return false;
  }
  return true;
}

Graph contracted_prefix(const Graph& h, const Ordering& omega, int s, int i, int j) {
  const std::vector<int> keep(omega.begin(), omega.begin() + s);
  return contract_edge(h.induced(keep), undirected(omega[i], omega[j]));
}

std::vector<ContractibleEdge> last_vertex_edges(const Graph& h, const Ordering& omega) {
  std::vector<ContractibleEdge> out;
  if (omega.size() < 2) return out;
  const int last = omega.back();
  for (int u : h.neighbors(last)) {
    ContractibleEdge ce{undirected(last, u), omega, {}};
    for (std::size_t p = 0; p + 1 < omega.size(); ++p) {
      const int v = omega[p];
      ce.phi.emplace_back(v, v == u ? std::min(u, last) : v);
    }
    out.push_back(std::move(ce));
  }
  return out;
}

namespace {

bool rooted_prefix(const Ordering& omega, const Root& root) {
  const std::size_t m = std::min(root.size(), omega.size());
  return std::equal(root.begin(), root.begin() + m, omega.begin());
}

int merged_label(int v, int a, int b) { return (v == a || v == b) ? std::min(a, b) : v; }

}  // namespace

bool check_replacement(const Graph& h, const Root& root, const Ordering& omega, int s, int i,
                       int j, const Replacement& r) {
  if (!is_recursive_ordering(h, r.ordering) || !rooted_prefix(r.ordering, root)) return false;
  const Graph k = contracted_prefix(h, omega, s, i, j);
  if (static_cast<int>(r.phi.size()) != s - 1 || k.vertex_count() != s - 1) return false;
  std::set<int> src(r.ordering.begin(), r.ordering.begin() + (s - 1));
  std::set<int> seen_src, seen_dst;
  for (auto [a, b] : r.phi) {
    if (!src.count(a) || !k.is_live(b)) return false;
    if (!seen_src.insert(a).second || !seen_dst.insert(b).second) return false;
  }
  for (std::size_t p = 0; p < r.phi.size(); ++p)
    for (std::size_t q = p + 1; q < r.phi.size(); ++q)
      if (h.has_edge(r.phi[p].first, r.phi[q].first) != k.has_edge(r.phi[p].second, r.phi[q].second))
        return false;
  for (int rho : root)
    for (auto [a, b] : r.phi)
      if (a == rho && b != merged_label(rho, omega[i], omega[j])) return false;
  return true;
}

VerifyResult verify_contractible(const Graph& h, const std::vector<Ordering>& omegas,
                                 const std::optional<Root>& root) {
  VerifyResult res;
  auto bad = [&](const Ordering& w, int s, int i, int j, std::string why) {
    res.ok = false;
    res.counterexample = Counterexample{w, s, i, j, std::move(why)};
    return res;
  };
  if (omegas.empty()) return bad({}, -1, -1, -1, "empty set");
  const Root rho = root.value_or(Root{});
  for (const auto& w : omegas) {
    if (!is_permutation_of(h, w)) fail(ErrorKind::kDomain, "verify_contractible: not an ordering of H");
    if (!rooted_prefix(w, rho)) return bad(w, -1, -1, -1, "not rooted");
    for (int s = 1; s < static_cast<int>(w.size()); ++s) {
      const auto nb = earlier_neighbor_positions(h, w, s);
      if (nb.size() > 2 || (nb.size() == 2 && !h.has_edge(w[nb[0]], w[nb[1]])))
        return bad(w, s, -1, -1, "not recursive");
    }
  }
  // Distinct prefix vertex sets by length.
  std::map<int, std::vector<std::vector<int>>> prefixes;
  for (const auto& w : omegas)
    for (int len = 1; len <= static_cast<int>(w.size()); ++len) {
      std::vector<int> p(w.begin(), w.begin() + len);
      std::sort(p.begin(), p.end());
      auto& bucket = prefixes[len];
      if (std::find(bucket.begin(), bucket.end(), p) == bucket.end()) bucket.push_back(std::move(p));
    }
  const std::size_t min_s = root ? 3 : 2;
  for (const auto& w : omegas)
    for (int s = static_cast<int>(min_s); s < static_cast<int>(w.size()); ++s) {
      const auto nb = earlier_neighbor_positions(h, w, s);
      if (nb.size() != 2) continue;
      const int i = nb[0], j = nb[1];
      if (rho.size() == 2 && std::set<int>{w[i], w[j]} == std::set<int>(rho.begin(), rho.end()))
        return bad(w, s, i, j, "contracted pair equals the root");
      const Graph k = contracted_prefix(h, w, s, i, j);
      std::vector<std::pair<int, int>> fixed;
      for (int r : rho) fixed.emplace_back(r, merged_label(r, w[i], w[j]));
      bool found = false;
      for (const auto& p : prefixes[s - 1]) {
        if (!std::all_of(rho.begin(), rho.end(),
                         [&](int r) { return std::binary_search(p.begin(), p.end(), r); }))
          continue;
        if (find_isomorphism(h.induced(p), k, fixed)) {
          found = true;
          break;
        }
      }
      if (!found) return bad(w, s, i, j, "no isomorphic shorter prefix");
    }
  res.ok = true;
  return res;
}

Materialized materialize(const OrderingScheme& scheme, std::size_t cap) {
  Materialized out;
  std::set<Ordering> seen;
  std::deque<Ordering> queue;
  auto push = [&](const Ordering& w) {
    if (seen.size() >= cap) {
      out.truncated = true;
      return;
    }
    if (seen.insert(w).second) {
      queue.push_back(w);
      out.orderings.push_back(w);
    }
  };
  push(scheme.initial());
  for (const auto& ce : scheme.contractible_edges()) push(ce.witness);
  while (!queue.empty()) {
    const Ordering w = queue.front();
    queue.pop_front();
    for (int s = 2; s < static_cast<int>(w.size()); ++s) {
      const auto nb = earlier_neighbor_positions(scheme.host(), w, s);
      if (nb.size() == 2) push(scheme.replace(w, s, nb[0], nb[1]).ordering);
    }
  }
  return out;
}

}  // namespace cominor
