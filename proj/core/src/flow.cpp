#include "cominor/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cominor {

FlowNetwork::FlowNetwork(int nodes) : first_(nodes), level_(nodes), cursor_(nodes) {}

int FlowNetwork::add_arc(int from, int to, int capacity, int cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0, cost});
  arcs_.push_back({from, 0, 0, -cost});
  first_[from].push_back(id);
  first_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<int> queue{s};
  level_[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int id : first_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap - a.flow > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

int FlowNetwork::push(int v, int t, int pushed) {
  if (v == t || pushed == 0) return pushed;
  for (std::size_t& c = cursor_[v]; c < first_[v].size(); ++c) {
    const int id = first_[v][c];
    Arc& a = arcs_[id];
    if (level_[a.to] != level_[v] + 1 || a.cap - a.flow <= 0) continue;
    const int got = push(a.to, t, std::min(pushed, a.cap - a.flow));
    if (got > 0) {
      a.flow += got;
      arcs_[id ^ 1].flow -= got;
      return got;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  int total = 0;
  while (total < limit && build_levels(s, t)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (total < limit) {
      const int got = push(s, t, limit - total);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

int FlowNetwork::min_cost_flow(int s, int t, int limit) {
  const int n = node_count();
  constexpr long long kFar = std::numeric_limits<long long>::max() / 4;
  int total = 0;
  total_cost_ = 0;
  std::vector<long long> dist(n);
  std::vector<int> via(n);
  std::vector<char> queued(n);
  while (total < limit) {
    std::fill(dist.begin(), dist.end(), kFar);
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    queued.assign(n, 0);
    queued[s] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      for (int id : first_[v]) {
        const Arc& a = arcs_[id];
        if (a.cap - a.flow <= 0) continue;
        const long long nd = dist[v] + a.cost;
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          via[a.to] = id;
          if (!queued[a.to]) {
            queued[a.to] = 1;
            queue.push_back(a.to);
          }
        }
      }
    }
    if (dist[t] == kFar) break;
    int push_amount = limit - total;
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to)
      push_amount = std::min(push_amount, arcs_[via[v]].cap - arcs_[via[v]].flow);
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += push_amount;
      arcs_[via[v] ^ 1].flow -= push_amount;
    }
    total += push_amount;
    total_cost_ += push_amount * dist[t];
  }
  return total;
}

std::vector<char> FlowNetwork::residual_reachable(int s) const {
  std::vector<char> seen(node_count(), 0);
  std::vector<int> queue{s};
  seen[s] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int id : first_[queue[i]]) {
      const Arc& a = arcs_[id];
      if (a.cap - a.flow > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
    }
  return seen;
}

}  // namespace cominor
