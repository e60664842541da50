// Simple graphs and digraphs with stable vertex ids.
//
// Vertices are identified by integers 0..capacity()-1. Deleting or
// contracting a vertex clears its liveness bit but never renumbers the
// survivors, so branch sets and orderings stay meaningful across the
// reductions the finders perform.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cominor/error.hpp"

namespace cominor {

/// Unordered pair for graphs, ordered pair (tail, head) for digraphs.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes an undirected edge so that u < v.
inline Edge undirected(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
 public:
  Graph() = default;
  /// n live isolated vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int capacity() const { return static_cast<int>(live_.size()); }
  int vertex_count() const { return live_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool is_live(int v) const { return v >= 0 && v < capacity() && live_[v]; }
  std::vector<int> vertices() const;
  /// Sorted neighbor list of a live vertex.
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // Mutators for building values. Algorithms copy before mutating.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void remove_vertex(int v);
  /// Appends a fresh isolated vertex and returns its id.
  int add_vertex();

  /// Induced subgraph on the given live vertices (ids preserved).
  Graph induced(std::span<const int> keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v, const char* where) const;

  std::vector<std::vector<int>> adj_;
  std::vector<char> live_;
  // Row bitsets for O(1) adjacency while capacity <= 64.
  std::vector<std::uint64_t> bits_;
  int live_count_ = 0;
  std::size_t edge_count_ = 0;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  static Digraph from_arcs(int n, std::span<const Edge> arcs);
  /// Both orientations of every edge of g.
  static Digraph biorientation(const Graph& g);
  static Digraph directed_cycle(int n);

  int capacity() const { return static_cast<int>(live_.size()); }
  int vertex_count() const { return live_count_; }
  std::size_t arc_count() const { return arc_count_; }

  bool is_live(int v) const { return v >= 0 && v < capacity() && live_[v]; }
  std::vector<int> vertices() const;
  std::span<const int> out_neighbors(int v) const { return out_[v]; }
  std::span<const int> in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  bool has_arc(int u, int v) const;
  std::vector<Edge> arcs() const;

  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  void remove_vertex(int v);
  int add_vertex();

  Digraph induced(std::span<const int> keep) const;
  /// Same vertex set with every arc reversed.
  Digraph reversed() const;
  /// Underlying simple graph (antiparallel pairs collapse).
  Graph underlying() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  void check_vertex(int v, const char* where) const;

  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<char> live_;
  std::vector<std::uint64_t> bits_;
  int live_count_ = 0;
  std::size_t arc_count_ = 0;
};

/// Record of one contraction: `removed` was merged into `survivor`.
struct ContractionDelta {
  int survivor = -1;
  int removed = -1;
};

/// G/e with loops and parallel edges dropped. The survivor keeps the
/// smaller id. Throws GraphError(kDomain) if e is not an edge.
Graph contract_edge(const Graph& g, Edge e);
Graph contract_edge(const Graph& g, Edge e, ContractionDelta& delta);

/// Butterfly contraction of arc (u,v); legal when out-degree(u) = 1 or
/// in-degree(v) = 1. Survivor keeps the smaller id. Throws
/// GraphError(kNotButterfly) when neither condition holds.
Digraph butterfly_contract(const Digraph& d, Edge arc);
Digraph butterfly_contract(const Digraph& d, Edge arc, ContractionDelta& delta);

/// Contraction of (u,v) without the butterfly legality check.
Digraph contract_arc_unchecked(const Digraph& d, Edge arc, ContractionDelta& delta);

/// H+ : adds an apex adjacent to every live vertex; apex gets id capacity().
Graph add_apex(const Graph& h);
/// H+ for digraphs: apex source with arcs to every live vertex.
Digraph add_apex_source(const Digraph& h);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degree;  // indexed by vertex id; -1 for dead ids
};

struct DirectedDegreeProfile {
  int min_out = 0;
  int min_in = 0;
  int max_out = 0;
  int max_in = 0;
  std::vector<int> out_degree;
  std::vector<int> in_degree;
};

DegreeProfile degree_profile(const Graph& g);
DirectedDegreeProfile degree_profile(const Digraph& d);

/// Strongly connected components in discovery-independent form: each
/// component sorted, components sorted by smallest member.
std::vector<std::vector<int>> strong_components(const Digraph& d);

/// A strongly connected component with no arcs leaving it; among several,
/// the one holding the smallest vertex id. Requires a nonempty digraph.
std::vector<int> strongly_connected_sink_component(const Digraph& d);

/// Connected components of g, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace cominor
