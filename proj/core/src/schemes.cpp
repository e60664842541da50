#include "cominor/schemes.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "cominor/outerplanar.hpp"

namespace cominor {

namespace {

Graph graph_union(const Graph& a, const Graph& b) {
  const int cap = std::max(a.capacity(), b.capacity());
  Graph g(cap);
  for (int v = 0; v < cap; ++v)
    if (!a.is_live(v) && !b.is_live(v)) g.remove_vertex(v);
  for (Edge e : a.edges()) g.add_edge(e.u, e.v);
  for (Edge e : b.edges())
    if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
  return g;
}

class SingleOrderingScheme final : public OrderingScheme {
 public:
  SingleOrderingScheme(Graph host, Root root, Ordering omega, std::string name)
      : OrderingScheme(std::move(host), std::move(root)), omega_(std::move(omega)),
        name_(std::move(name)) {
    if (!is_recursive_ordering(this->host(), omega_))
      fail(ErrorKind::kDomain, name_ + ": ordering is not recursive");
    if (!std::equal(this->root().begin(), this->root().end(), omega_.begin()))
      fail(ErrorKind::kDomain, name_ + ": ordering does not start with the root");
  }

  Ordering initial() const override { return omega_; }
  std::string name() const override { return name_; }

 protected:
  Replacement replace_step(const Ordering&, int, int, int) const override {
    fail(ErrorKind::kContractStep, name_ + ": no contraction step exists");
  }

 private:
  Ordering omega_;
  std::string name_;
};

class RestrictedScheme final : public OrderingScheme {
 public:
  RestrictedScheme(SchemePtr inner, Root shorter)
      : OrderingScheme(inner->host(), std::move(shorter)), inner_(std::move(inner)) {
    const Root& full = inner_->root();
    if (root().size() > full.size() || !std::equal(root().begin(), root().end(), full.begin()))
      fail(ErrorKind::kDomain, "restrict_root: not a prefix of the root");
  }

  Ordering initial() const override { return inner_->initial(); }
  std::string name() const override { return inner_->name(); }
  std::vector<ContractibleEdge> contractible_edges() const override {
    return inner_->contractible_edges();
  }

 protected:
  Replacement replace_step(const Ordering& w, int s, int i, int j) const override {
    return inner_->replace(w, s, i, j);
  }

 private:
  SchemePtr inner_;
};

class GluedScheme final : public OrderingScheme {
 public:
  GluedScheme(SchemePtr base, SchemePtr attached, int glue_case)
      : OrderingScheme(graph_union(base->host(), attached->host()), base->root()),
        a_(std::move(base)), b_(std::move(attached)) {
    t_ = a_->host().vertex_count();
    const Root& rb = b_->root();
    m_ = static_cast<int>(rb.size());
    if (glue_case < 1 || glue_case > 3 || m_ != glue_case - 1)
      fail(ErrorKind::kDomain, "glue: root size does not match the case");
    std::vector<int> shared;
    const auto va = a_->host().vertices();
    const auto vb = b_->host().vertices();
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    std::vector<int> want(rb.begin(), rb.end());
    std::sort(want.begin(), want.end());
    if (shared != want) fail(ErrorKind::kDomain, "glue: hosts must meet exactly in the attached root");
    if (glue_case == 3) {
      std::vector<int> ra(a_->root().begin(), a_->root().end());
      std::sort(ra.begin(), ra.end());
      if (ra == want) fail(ErrorKind::kDomain, "glue: shared pair equals the base root");
      base_edges_ = a_->contractible_edges();
      const Edge e = undirected(rb[0], rb[1]);
      if (std::none_of(base_edges_.begin(), base_edges_.end(),
                       [&](const ContractibleEdge& ce) { return ce.edge == e; }))
        fail(ErrorKind::kDomain, "glue: shared pair is not a contractible edge of the base");
    }
  }

  Ordering initial() const override { return psi(a_->initial(), b_->initial()); }
  std::string name() const override { return "glue(" + a_->name() + "," + b_->name() + ")"; }

  std::vector<ContractibleEdge> contractible_edges() const override {
    auto attached = b_->contractible_edges();
    if (attached.empty()) return OrderingScheme::contractible_edges();
    const Ordering w = a_->initial();
    std::vector<ContractibleEdge> out;
    for (auto& ce : attached) {
      ContractibleEdge g{ce.edge, psi(w, ce.witness), ce.phi};
      add_identity(w, g.phi);
      out.push_back(std::move(g));
    }
    return out;
  }

 protected:
  Replacement replace_step(const Ordering& p, int s, int i, int j) const override {
    Ordering w(p.begin(), p.begin() + t_);
    Ordering w2(b_->root().begin(), b_->root().end());
    w2.insert(w2.end(), p.begin() + t_, p.end());
    if (s < t_) {
      auto r = a_->replace(w, s, i, j);
      return {psi(r.ordering, w2), std::move(r.phi)};
    }
    const bool both_base = a_->host().is_live(p[i]) && a_->host().is_live(p[j]);
    if (both_base) {
      const Edge e = undirected(p[i], p[j]);
      for (const auto& ce : base_edges_)
        if (ce.edge == e) return {psi(ce.witness, w2), ce.phi};
      fail(ErrorKind::kInvariantViolation, "glue: missing witness for the shared edge");
    }
    const int s2 = s - t_ + m_;
    if (s2 == 2) {
      Replacement r{p, {}};
      for (int q = 0; q + 1 < s; ++q)
        r.phi.emplace_back(p[q], p[q] == w2[0] ? std::min(w2[0], w2[1]) : p[q]);
      return r;
    }
    auto r = b_->replace(w2, s2, attached_position(p, i), attached_position(p, j));
    Replacement out{psi(w, r.ordering), std::move(r.phi)};
    add_identity(w, out.phi);
    return out;
  }

 private:
  Ordering psi(const Ordering& w, const Ordering& w2) const {
    Ordering out = w;
    out.insert(out.end(), w2.begin() + m_, w2.end());
    return out;
  }

  int attached_position(const Ordering& p, int q) const {
    if (q >= t_) return q - t_ + m_;
    const Root& rb = b_->root();
    const auto it = std::find(rb.begin(), rb.end(), p[q]);
    if (it == rb.end()) fail(ErrorKind::kInvariantViolation, "glue: neighbor outside attached host");
    return static_cast<int>(it - rb.begin());
  }

  // Identity on base vertices that the attached map does not already cover.
  void add_identity(const Ordering& w, PairMap& phi) const {
    const Root& rb = b_->root();
    for (int v : w)
      if (std::find(rb.begin(), rb.end(), v) == rb.end()) phi.emplace_back(v, v);
  }

  SchemePtr a_;
  SchemePtr b_;
  int t_ = 0;
  int m_ = 0;
  std::vector<ContractibleEdge> base_edges_;
};

}  // namespace

SchemePtr make_single_ordering_scheme(Graph host, Root root, Ordering omega, std::string name) {
  return std::make_shared<SingleOrderingScheme>(std::move(host), std::move(root), std::move(omega),
                                                std::move(name));
}

SchemePtr make_tree_scheme(const Graph& tree, int v) {
  if (!tree.is_live(v)) fail(ErrorKind::kDomain, "tree scheme: root not in tree");
  if (!is_connected(tree) || tree.edge_count() + 1 != static_cast<std::size_t>(tree.vertex_count()))
    fail(ErrorKind::kDomain, "tree scheme: not a tree");
  Ordering order{v};
  std::vector<char> seen(tree.capacity(), 0);
  seen[v] = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int w : tree.neighbors(order[k]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return make_single_ordering_scheme(tree, {v}, std::move(order), "tree");
}

SchemePtr glue_schemes(SchemePtr base, SchemePtr attached, int glue_case) {
  return std::make_shared<GluedScheme>(std::move(base), std::move(attached), glue_case);
}

SchemePtr restrict_root(SchemePtr scheme, Root shorter) {
  return std::make_shared<RestrictedScheme>(std::move(scheme), std::move(shorter));
}

}  // namespace cominor
