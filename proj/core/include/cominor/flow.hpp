// Integer max-flow on small networks: Dinic for maximum flow and successive
// shortest paths (SPFA) for minimum-cost flow. Arcs are explored in
// insertion order, so results are deterministic given a deterministic
// construction order.

#pragma once

#include <cstdint>
#include <vector>

namespace cominor {

class FlowNetwork {
 public:
  static constexpr int kInf = 1 << 28;

  explicit FlowNetwork(int nodes);

  /// Returns the arc index; its residual twin is index ^ 1.
  int add_arc(int from, int to, int capacity, int cost = 0);

  /// Augments from s to t until no path remains or `limit` units flow.
  int max_flow(int s, int t, int limit = kInf);

  /// Minimum total cost among flows of maximum value (capped by `limit`).
  /// Returns the flow value; cost is available via total_cost().
  int min_cost_flow(int s, int t, int limit = kInf);

  long long total_cost() const { return total_cost_; }
  int flow_on(int arc) const { return arcs_[arc].flow; }
  int head(int arc) const { return arcs_[arc].to; }
  int capacity(int arc) const { return arcs_[arc].cap; }
  int node_count() const { return static_cast<int>(first_.size()); }
  const std::vector<int>& arcs_from(int node) const { return first_[node]; }

  /// Nodes reachable from s in the residual network.
  std::vector<char> residual_reachable(int s) const;

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    int cost;
  };

  bool build_levels(int s, int t);
  int push(int v, int t, int pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> first_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  long long total_cost_ = 0;
};

}  // namespace cominor
